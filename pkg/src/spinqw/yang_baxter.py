"""Three-vertex Yang-Baxter checkers: seven concrete instances plus the two
label-continued equations behind the deformed ones.

Each instance evaluates both sides of its equation as explicit sums over
internal edge labels, with conservation solving all but one internal label.
Boundary labels are ordered (a1, a2, a3, b1, b2, b3) as in the defining
displays; each instance carries the signed conservation law its orientations
impose, and only balanced boundary tuples are enumerated (all others give
0 = 0).  The deformed instances have different parameters on the two sides
on purpose, and the checker never normalizes them away.

Checks are exact: LHS and RHS are compared as rationals at seeded random
rational parameter points (numerators and denominators bounded by 97,
q sampled along with the spectral parameters), re-drawing a point whenever
it hits a pole of some weight.
"""

from __future__ import annotations

import random
from itertools import product as iproduct

from .report import VerificationReport
from .scalars import PoleError, fmt_rational, rand_rat
from .weights import (
    R_mat,
    W_col,
    W_hat,
    W_s,
    W_tilde,
    w_col,
    w_s,
    w_s_star,
    w_tilde_star,
)

THIN = (0, 1)


def _memo(fn):
    cache = {}

    def wrapped(*labels):
        try:
            return cache[labels]
        except KeyError:
            val = fn(*labels)
            cache[labels] = val
            return val

    return wrapped


def _draw(rng, avoid_unit=False):
    val = rand_rat(rng)
    while val == 0 or (avoid_unit and abs(val) == 1):
        val = rand_rat(rng)
    return val


def _sampler(names, constraint=None):
    """Draw q plus the named parameters; `constraint` may add derived ones."""

    def sample(rng):
        out = {"q": _draw(rng, avoid_unit=True)}
        for name in names:
            out[name] = _draw(rng, avoid_unit=(name in ("eta", "q")))
        if constraint:
            constraint(out)
        return out

    return sample


def _xs_equals_yt(p):
    p["y"] = p["x"] * p["s"] / p["t"]


def _x_over_s_equals_y_over_t(p):
    p["y"] = p["t"] * p["x"] / p["s"]


class ThreeVertexInstance:
    """One named Yang-Baxter equation with six boundary slots."""

    def __init__(self, name, kinds, flow, sampler, sides, doc=""):
        self.name = name
        self.kinds = kinds  # 'thin' | 'thick' per slot (a1,a2,a3,b1,b2,b3)
        self.flow = flow  # +1 incoming / -1 outgoing per slot
        self.sampler = sampler
        self.sides = sides  # params -> (lhs_fn, rhs_fn) over boundary tuples
        self.doc = doc

    def boundaries(self, cap: int):
        ranges = [THIN if k == "thin" else range(cap + 1) for k in self.kinds]
        for bnd in iproduct(*ranges):
            if sum(s * v for s, v in zip(self.flow, bnd)) == 0:
                yield bnd

    def describe_point(self, params) -> str:
        bits = []
        for key in sorted(params):
            val = params[key]
            if isinstance(val, tuple):
                val = "(" + ",".join(fmt_rational(v) for v in val) + ")"
            else:
                val = fmt_rational(val)
            bits.append(f"{key}={val}")
        return ", ".join(bits)


# --------------------------------------------------------------- higher spin


def _sides_hs(p):
    q, x, y, s = p["q"], p["x"], p["y"], p["s"]
    wx = _memo(lambda *ls: w_s(q, x, s, *ls))
    wy = _memo(lambda *ls: w_s(q, y, s, *ls))
    R = _memo(lambda *ls: R_mat(q, x / y, *ls))

    def lhs(a1, a2, a3, b1, b2, b3):
        total = 0
        for l2 in THIN:
            l1 = a1 + a2 - l2
            l3 = l1 + a3 - b1
            if l1 < 0 or l3 not in THIN:
                continue
            total += wx(a1, a2, l1, l2) * wy(l1, a3, b1, l3) * R(l2, l3, b2, b3)
        return total

    def rhs(a1, a2, a3, b1, b2, b3):
        total = 0
        for l2 in THIN:
            l3 = a2 + a3 - l2
            l1 = a1 + l3 - b3
            if l3 not in THIN or l1 < 0:
                continue
            total += R(a2, a3, l2, l3) * wy(a1, l3, l1, b3) * wx(l1, l2, b1, b2)
        return total

    return lhs, rhs


# ------------------------------------------------- q-Hahn lines (plain and
# deformed; the deformation multiplies selected squared parameters by eta^2)


def _sides_w_family(p, deformed: bool):
    q, t1, t2, t3 = p["q"], p["t1sq"], p["t2sq"], p["t3sq"]
    e = p["eta"] * p["eta"] if deformed else 1
    A = _memo(lambda *ls: W_s(q, e * t2, e * t3, *ls))
    B = _memo(lambda *ls: W_s(q, t1, t3, *ls))
    C = _memo(lambda *ls: W_s(q, e * t1, e * t2, *ls))
    Cp = _memo(lambda *ls: W_s(q, t1, t2, *ls))
    Bp = _memo(lambda *ls: W_s(q, e * t1, e * t3, *ls))
    Ap = _memo(lambda *ls: W_s(q, t2, t3, *ls))

    def lhs(a1, a2, a3, b1, b2, b3):
        total = 0
        for l3 in range(a2 + a3 + 1):
            l2 = a3 + a2 - l3
            l1 = l3 + a1 - b3
            if l1 < 0 or l2 + l1 != b2 + b1:
                continue
            total += A(a3, a2, l3, l2) * B(l3, a1, b3, l1) * C(l2, l1, b2, b1)
        return total

    def rhs(a1, a2, a3, b1, b2, b3):
        total = 0
        for l1 in range(a1 + a2 + 1):
            l2 = a2 + a1 - l1
            l3 = a3 + l1 - b1
            if l3 < 0 or l3 + l2 != b3 + b2:
                continue
            total += Cp(a2, a1, l2, l1) * Bp(a3, l1, l3, b1) * Ap(l3, l2, b3, b2)
        return total

    return lhs, rhs


def _sides_w(p):
    return _sides_w_family(p, deformed=False)


def _sides_def_w(p):
    return _sides_w_family(p, deformed=True)


# ------------------------------------------------------------------ dual YBE


def _sides_dual(p):
    q, x, y, s = p["q"], p["x"], p["y"], p["s"]
    wx = _memo(lambda *ls: w_s_star(q, x, s, *ls))
    wy = _memo(lambda *ls: w_s_star(q, y, s, *ls))
    R = _memo(lambda *ls: R_mat(q, y / x, *ls))

    def lhs(a1, a2, a3, b1, b2, b3):
        total = 0
        for l2 in THIN:
            l1 = a1 + l2 - a2
            l3 = b1 + a3 - l1
            if l1 < 0 or l3 not in THIN:
                continue
            total += wx(a1, l2, l1, a2) * wy(l1, l3, b1, a3) * R(l3, l2, b3, b2)
        return total

    def rhs(a1, a2, a3, b1, b2, b3):
        total = 0
        for l2 in THIN:
            l3 = a3 + a2 - l2
            l1 = a1 + b3 - l3
            if l3 not in THIN or l1 < 0:
                continue
            total += R(a3, a2, l3, l2) * wy(a1, b3, l1, l3) * wx(l1, b2, b1, l2)
        return total

    return lhs, rhs


# --------------------------------------- Cauchy-type (xs = yt), plain and
# deformed (eta x, eta s on one side; eta y, eta t on the other)


def _sides_cauchy_family(p, deformed: bool):
    q, x, y, s, t = p["q"], p["x"], p["y"], p["s"], p["t"]
    e = p["eta"] if deformed else 1
    W = _memo(lambda *ls: W_s(q, t * t, s * s, *ls))
    wxs = _memo(lambda *ls: w_s_star(q, e * x, e * s, *ls))
    wyt = _memo(lambda *ls: w_s_star(q, y, t, *ls))
    wxs_p = _memo(lambda *ls: w_s_star(q, x, s, *ls))
    wyt_p = _memo(lambda *ls: w_s_star(q, e * y, e * t, *ls))

    def lhs(a1, a2, a3, b1, b2, b3):
        total = 0
        for l3 in range(a3 + a2 + 1):
            l2 = a3 + a2 - l3
            l1 = b3 + a1 - l3
            if l1 not in THIN or l2 + b1 != b2 + l1:
                continue
            total += W(a3, a2, l3, l2) * wxs(l3, l1, b3, a1) * wyt(l2, b1, b2, l1)
        return total

    def rhs(a1, a2, a3, b1, b2, b3):
        total = 0
        for l1 in THIN:
            l2 = a2 + l1 - a1
            l3 = a3 + b1 - l1
            if l2 < 0 or l3 < 0 or l3 + l2 != b3 + b2:
                continue
            total += wyt_p(a2, l1, l2, a1) * wxs_p(a3, b1, l3, l1) * W(l3, l2, b3, b2)
        return total

    return lhs, rhs


def _sides_cauchy(p):
    return _sides_cauchy_family(p, deformed=False)


def _sides_def_cauchy(p):
    return _sides_cauchy_family(p, deformed=True)


# --------------------------------------------------------- colored, deformed


def _unit(n, c):
    e = [0] * n
    if c > 0:
        e[c - 1] = 1
    return tuple(e)


class ColoredInstance(ThreeVertexInstance):
    """Colored deformed equation; thick slots carry length-n compositions
    (capped by total size), thin slots carry a color 0..n."""

    def __init__(self, name, ncolors, sampler, sides, doc=""):
        super().__init__(
            name,
            ("thin", "thick", "thick", "thin", "thick", "thick"),
            (1, 1, 1, -1, -1, -1),
            sampler,
            sides,
            doc,
        )
        self.ncolors = ncolors

    def boundaries(self, cap: int):
        n = self.ncolors
        comps = [
            c for c in iproduct(*([range(cap + 1)] * n)) if sum(c) <= cap
        ]
        for a in range(n + 1):
            ea = _unit(n, a)
            for b in range(n + 1):
                eb = _unit(n, b)
                for A1, A2 in iproduct(comps, comps):
                    tot = tuple(x + y + z for x, y, z in zip(A1, A2, ea))
                    for B2 in comps:
                        B1 = tuple(
                            x - y - z for x, y, z in zip(tot, B2, eb)
                        )
                        if min(B1) < 0 or sum(B1) > cap:
                            continue
                        yield (a, A1, A2, b, B1, B2)


def _sides_colored(n):
    def sides(p):
        q = p["q"]
        x, y, s, t, eta = p["x"], p["y"], p["s"], p["t"], p["eta"]
        Wc = _memo(lambda *ls: W_col(q, t * t, s * s, *ls))
        w_up = _memo(lambda *ls: w_col(q, n, x / eta, eta * s, *ls))
        w_cr = _memo(lambda *ls: w_col(q, n, y, t, *ls))
        w_cr_p = _memo(lambda *ls: w_col(q, n, y / eta, eta * t, *ls))
        w_dn_p = _memo(lambda *ls: w_col(q, n, x, s, *ls))

        def lhs(a, A1, A2, b, B1, B2):
            total = 0
            ea = _unit(n, a)
            for c in range(n + 1):
                ec = _unit(n, c)
                L2 = tuple(v + e1 - e2 for v, e1, e2 in zip(B2, ec, ea))
                if min(L2) < 0:
                    continue
                L1 = tuple(v + w - z for v, w, z in zip(A1, A2, L2))
                if min(L1) < 0:
                    continue
                total += Wc(A2, A1, L2, L1) * w_up(L2, a, B2, c) * w_cr(L1, c, B1, b)
            return total

        def rhs(a, A1, A2, b, B1, B2):
            total = 0
            ea = _unit(n, a)
            eb = _unit(n, b)
            for c in range(n + 1):
                ec = _unit(n, c)
                L1 = tuple(v + e1 - e2 for v, e1, e2 in zip(A1, ea, ec))
                if min(L1) < 0:
                    continue
                L2 = tuple(v + e1 - e2 for v, e1, e2 in zip(A2, ec, eb))
                if min(L2) < 0:
                    continue
                total += (
                    w_cr_p(A1, a, L1, c) * w_dn_p(A2, c, L2, b) * Wc(L2, L1, B2, B1)
                )
            return total

        return lhs, rhs

    return sides


# ------------------------------------------------ continued-label equations


class ContCauchyInstance(ThreeVertexInstance):
    """Label-continued rewriting of the Cauchy-type equation: an identity of
    rational functions in the free continued label, checked at six distinct
    rational values per boundary (enough for the degree bound)."""

    ALPHAS = 6

    def boundaries(self, cap: int):
        # (a1, a3, b2, b1); the continued-label step delta is boundary-determined
        for a1, b1 in iproduct(THIN, THIN):
            for a3, b2 in iproduct(range(cap + 1), range(cap + 1)):
                yield (a1, a3, b2, b1)


def _sample_cont_cauchy(rng):
    p = _sampler(("x", "s", "t"), _xs_equals_yt)(rng)
    p["alphas"] = tuple(_draw(rng) for _ in range(ContCauchyInstance.ALPHAS))
    return p


def _sides_cont_cauchy(p):
    q, x, y, s, t = p["q"], p["x"], p["y"], p["s"], p["t"]
    alphas = p["alphas"]
    Wt = _memo(lambda *ls: W_tilde(q, t * t, s * s, *ls))
    wd = _memo(lambda *ls: w_s_star(q, x, s, *ls))
    wyt = _memo(lambda *ls: w_s_star(q, y, t, *ls))

    def lhs(a1, a3, b2, b1):
        delta = a3 - b2 + b1 - a1
        out = []
        for alpha in alphas:
            total = 0
            for l2 in range(a3 + 1):
                d1 = a3 - l2
                l1 = l2 + b1 - b2
                if l1 not in THIN or delta - d1 != l1 - a1:
                    continue
                _, wt = w_tilde_star(q, x, s, alpha * q**d1, l1, a1)
                total += Wt(a3, d1, l2) * wt * wyt(l2, b1, b2, l1)
            out.append(total)
        return tuple(out)

    def rhs(a1, a3, b2, b1):
        delta = a3 - b2 + b1 - a1
        out = []
        for alpha in alphas:
            total = 0
            for l1 in THIN:
                l3 = a3 + b1 - l1
                d2 = l3 - b2
                if l3 < 0 or d2 < 0 or delta != (l1 - a1) + d2:
                    continue
                _, wt = w_tilde_star(q, y, t, alpha, l1, a1)
                total += wt * wd(a3, b1, l3, l1) * Wt(l3, d2, b2)
            out.append(total)
        return tuple(out)

    return lhs, rhs


class ContWInstance(ThreeVertexInstance):
    """Label-continued rewriting of the q-Hahn equation, restricted to
    continued labels q^N (integer N >= 0), where the infinite Pochhammer
    ratios collapse to finite ones."""

    NS = (0, 1, 2, 3)

    def boundaries(self, cap: int):
        # (a1, a2, b2, b3); the continued-label step delta is boundary-determined
        yield from iproduct(*([range(cap + 1)] * 4))


def _sides_cont_w(p):
    q, t1, t2, t3 = p["q"], p["t1sq"], p["t2sq"], p["t3sq"]
    W13 = _memo(lambda *ls: W_s(q, t1, t3, *ls))
    W12 = _memo(lambda *ls: W_s(q, t1, t2, *ls))
    W23 = _memo(lambda *ls: W_s(q, t2, t3, *ls))
    H23 = _memo(lambda *ls: W_hat(q, t2, t3, *ls))
    H12 = _memo(lambda *ls: W_hat(q, t1, t2, *ls))
    H13 = _memo(lambda *ls: W_hat(q, t1, t3, *ls))

    def lhs(a1, a2, b2, b3):
        out = []
        for N in ContWInstance.NS:
            total = 0
            for l1 in range(b2 + 1):
                l3 = b3 + l1 - a1
                if l3 < 0:
                    continue
                total += (
                    H23(N + b2 - l1, l3 - a2, a2, l3)
                    * W13(l3, a1, b3, l1)
                    * H12(N, b2 - l1, l1, b2)
                )
            out.append(total)
        return tuple(out)

    def rhs(a1, a2, b2, b3):
        delta = b3 + b2 - a1 - a2
        out = []
        for N in ContWInstance.NS:
            total = 0
            if delta >= 0:
                for l2 in range(a1 + a2 + 1):
                    l1 = a1 + a2 - l2
                    total += (
                        W12(a2, a1, l1, l2)
                        * H13(N, delta, l2, l2 + delta)
                        * W23(l2 + delta, l1, b3, b2)
                    )
            out.append(total)
        return tuple(out)

    return lhs, rhs


# ------------------------------------------------------------------ registry


INSTANCES = {
    "hs": ThreeVertexInstance(
        "hs",
        ("thick", "thin", "thin", "thick", "thin", "thin"),
        (1, 1, 1, -1, -1, -1),
        _sampler(("x", "y", "s")),
        _sides_hs,
        doc="higher spin weights with one crossing vertex",
    ),
    "w": ThreeVertexInstance(
        "w",
        ("thick",) * 6,
        (1, 1, 1, -1, -1, -1),
        _sampler(("t1sq", "t2sq", "t3sq")),
        _sides_w,
        doc="q-Hahn weights, three thick lines",
    ),
    "dual": ThreeVertexInstance(
        "dual",
        ("thick", "thin", "thin", "thick", "thin", "thin"),
        (1, -1, -1, -1, 1, 1),
        _sampler(("x", "y", "s")),
        _sides_dual,
        doc="dual higher spin weights with the inverted crossing",
    ),
    "cauchy": ThreeVertexInstance(
        "cauchy",
        ("thin", "thick", "thick", "thin", "thick", "thick"),
        (-1, 1, 1, 1, -1, -1),
        _sampler(("x", "s", "t"), _xs_equals_yt),
        _sides_cauchy,
        doc="mixed q-Hahn/dual equation under the constraint xs = yt",
    ),
    "def-w": ThreeVertexInstance(
        "def-w",
        ("thick",) * 6,
        (1, 1, 1, -1, -1, -1),
        _sampler(("t1sq", "t2sq", "t3sq", "eta")),
        _sides_def_w,
        doc="deformed q-Hahn equation; sides carry different parameters",
    ),
    "def-cauchy": ThreeVertexInstance(
        "def-cauchy",
        ("thin", "thick", "thick", "thin", "thick", "thick"),
        (-1, 1, 1, 1, -1, -1),
        _sampler(("x", "s", "t", "eta"), _xs_equals_yt),
        _sides_def_cauchy,
        doc="deformed mixed equation under xs = yt",
    ),
    "col-def": ColoredInstance(
        "col-def",
        2,
        _sampler(("x", "s", "t", "eta"), _x_over_s_equals_y_over_t),
        _sides_colored(2),
        doc="colored deformed equation (two colors) under x/s = y/t",
    ),
    "cont-cauchy": ContCauchyInstance(
        "cont-cauchy",
        ("thin", "thick", "thick", "thin"),
        (),
        _sample_cont_cauchy,
        _sides_cont_cauchy,
        doc="label-continued mixed equation, rational identity in alpha",
    ),
    "cont-w": ContWInstance(
        "cont-w",
        ("thick",) * 4,
        (),
        _sampler(("t1sq", "t2sq", "t3sq")),
        _sides_cont_w,
        doc="label-continued q-Hahn equation at integer label powers",
    ),
}

STANDARD_SEVEN = ("hs", "w", "dual", "cauchy", "def-w", "def-cauchy", "col-def")


def check_instance(
    instance, cap: int, trials: int, seed, perturb: bool = False
) -> VerificationReport:
    """Exhaustively compare the two sides over all conserving boundary tuples
    within the label cap, at `trials` seeded random rational parameter points.

    With perturb=True the RHS is evaluated at a shifted parameter point (a
    negative control: the report must then record failures).
    """
    if isinstance(instance, str):
        instance = INSTANCES[instance]
    rng = random.Random(seed)
    report = VerificationReport(instance.name, "exact", seed=seed)
    boundaries = list(instance.boundaries(cap))
    done = 0
    redraws = 0
    while done < trials:
        params = instance.sampler(rng)
        try:
            lhs_fn, _ = instance.sides(params)
            rhs_params = params
            if perturb:
                rhs_params = dict(params)
                name = next(k for k in sorted(rhs_params) if k not in ("alphas",))
                rhs_params[name] = rhs_params[name] + 1
            _, rhs_fn = instance.sides(rhs_params)
            point = instance.describe_point(params)
            for bnd in boundaries:
                lhs = lhs_fn(*bnd)
                rhs = rhs_fn(*bnd)
                report.instances += 1
                if lhs != rhs:
                    report.record_failure(
                        f"point [{point}] boundary {bnd}: LHS {lhs} != RHS {rhs}"
                    )
        except PoleError:
            redraws += 1
            if redraws > 50 * (trials + 1):
                raise
            continue
        done += 1
        report.trials = done
    report.point = f"random rationals, numerators/denominators <= 97, seed {seed}"
    if redraws:
        report.notes.append(f"redrew {redraws} pole point(s)")
    return report
