"""Local vertex weights, as pure scalar functions of edge labels and parameters.

Argument-order conventions (fixed throughout the package):

* up-right families ``w_s``, ``W_s``, ``W_fused``, ``w_col``, ``W_col`` take
  labels (i, j; k, l) = (bottom, left; top, right), conservation i+j = k+l;
* up-left (dual) families ``w_s_star``, ``W_s_star`` take (i, l; k, j) =
  (bottom, right; top, left), conservation i+l = k+j;
* thin labels live in {0, 1}; thick labels are any nonnegative integer;
  every family returns exactly 0 when its conservation law fails or a label
  leaves its alphabet's range.

q-Hahn-type families take t^2 and s^2 directly: only the squares enter their
formulas, so no square roots of parameters ever appear here.

Vanishing denominators raise PoleError rather than returning infinities:
random rational parameter points avoid poles almost surely, and a hit must be
visible.
"""

from __future__ import annotations

from .scalars import PoleError, qpoch


def _guard(den, what: str):
    if den == 0:
        raise PoleError(f"pole in {what}")
    return den


def w_s(q, u, s, i: int, j: int, k: int, l: int):
    """Higher spin weight; thin j, l in {0,1}, thick i, k >= 0."""
    if j not in (0, 1) or l not in (0, 1):
        raise ValueError("horizontal labels of w_s must be 0 or 1")
    if i < 0 or k < 0 or i + j != k + l:
        return 0
    den = _guard(1 - s * u, "w_s: 1 - su = 0")
    qg = q**i
    if j == 0 and l == 0:
        return (1 - s * u * qg) / den
    if j == 0 and l == 1:  # k = i - 1
        return (qg - 1) * s * u / den
    if j == 1 and l == 0:  # k = i + 1
        return (1 - s * s * qg) / den
    return (s * s * qg - s * u) / den


def w_s_star(q, u, s, i: int, l: int, k: int, j: int):
    """Dual higher spin weight; thin j, l in {0,1}, thick i, k >= 0."""
    if j not in (0, 1) or l not in (0, 1):
        raise ValueError("horizontal labels of w_s_star must be 0 or 1")
    if i < 0 or k < 0 or i + l != k + j:
        return 0
    if s == 0:
        raise PoleError("w_s_star: s = 0")
    den = _guard(1 - s * u, "w_s_star: 1 - su = 0")
    qg = q**i
    if j == 0 and l == 0:
        return (1 - s * u * qg) / den
    if j == 0 and l == 1:  # k = i + 1
        return -(u / s) * (1 - s * s * qg) / den
    if j == 1 and l == 0:  # k = i - 1
        return (1 - qg) / den
    return (qg - u / s) / den


def R_mat(q, z, i: int, j: int, k: int, l: int):
    """Crossing weights: the six listed values, 0 for every other tuple."""
    if (i, j, k, l) in ((0, 0, 0, 0), (1, 1, 1, 1)):
        return 1 - q * z
    if (i, j, k, l) == (0, 1, 0, 1):
        return 1 - z
    if (i, j, k, l) == (0, 1, 1, 0):
        return z * (1 - q)
    if (i, j, k, l) == (1, 0, 0, 1):
        return 1 - q
    if (i, j, k, l) == (1, 0, 1, 0):
        return q * (1 - z)
    return 0


def R_star(q, z, i: int, j: int, k: int, l: int):
    """Dual crossing weights: R at the inverted spectral parameter."""
    if z == 0:
        raise PoleError("R_star: z = 0")
    return R_mat(q, 1 / z, i, j, k, l)


def W_s(q, t2, s2, i: int, j: int, k: int, l: int):
    """q-Hahn weight, parametrized by the squares t^2, s^2; all labels thick."""
    if min(i, j, k, l) < 0 or i + j != k + l or i < l:
        return 0
    den = _guard(qpoch(s2, q, i), "W_s: (s^2;q)_i = 0")
    if t2 == 0:
        raise PoleError("W_s: t^2 = 0")
    val = (s2 / t2) ** l * qpoch(s2 / t2, q, i - l) * qpoch(t2, q, l) / den
    return val * qpoch(q, q, i) / (qpoch(q, q, i - l) * qpoch(q, q, l))


def W_s_star(q, t2, s2, i: int, l: int, k: int, j: int):
    """Dual q-Hahn weight; conservation i + l = k + j and i >= j."""
    if min(i, j, k, l) < 0 or i + l != k + j or i < j:
        return 0
    den = _guard(qpoch(s2, q, i), "W_s_star: (s^2;q)_i = 0")
    val = t2 ** (i - j) * qpoch(s2 / t2, q, i - j) * qpoch(t2, q, j) / den
    return val * qpoch(q, q, i) / (qpoch(q, q, i - j) * qpoch(q, q, j))


def phi(q, a: int, b: int, x, y):
    """(y/x)^a (x;q)_a (y/x;q)_{b-a} / (y;q)_b * (q;q)_b / ((q;q)_a (q;q)_{b-a})."""
    if a < 0 or b < a:
        return 0
    if x == 0:
        raise PoleError("phi: x = 0")
    den = _guard(qpoch(y, q, b), "phi: (y;q)_b = 0")
    val = (y / x) ** a * qpoch(x, q, a) * qpoch(y / x, q, b - a) / den
    return val * qpoch(q, q, b) / (qpoch(q, q, a) * qpoch(q, q, b - a))


def W_fused(q, J: int, u, s, i: int, j: int, k: int, l: int):
    """Fused column weight with horizontal labels j, l <= J (closed form)."""
    if j > J or l > J:
        raise ValueError("fused horizontal labels must be <= J")
    if min(i, j, k, l) < 0 or i + j != k + l:
        return 0
    qJ = q**J
    total = 0
    for p in range(0, min(j, k) + 1):
        total = total + phi(q, k - p, k + l - p, s * u * qJ, s * u) * phi(
            q, p, j, s / (u * qJ), q ** (-J)
        )
    return u ** (l - j) * q ** (i * J) * s ** (j + l) * total


def w_tilde_star(q, u, s, alpha, l: int, j: int):
    """Analytically continued dual weight: returns (beta, weight) given the
    incoming continued label alpha and the thin pair (l = right, j = left);
    beta is forced to alpha, q*alpha or alpha/q by the label pair."""
    if j not in (0, 1) or l not in (0, 1):
        raise ValueError("thin labels of w_tilde_star must be 0 or 1")
    den = _guard(1 - s * u, "w_tilde_star: 1 - su = 0")
    if j == 0 and l == 0:
        return alpha, (1 - s * u * alpha) / den
    if j == 0 and l == 1:
        return q * alpha, -(u / s) * (1 - s * s * alpha) / den
    if j == 1 and l == 0:
        return alpha / q, (1 - alpha) / den
    return alpha, (alpha - u / s) / den


def W_tilde(q, t2, s2, i: int, delta: int, l: int):
    """Continued q-Hahn weight: nonzero only for delta = i - l >= 0, and then
    independent of the continued label."""
    if delta != i - l or delta < 0 or min(i, l) < 0:
        return 0
    den = _guard(qpoch(s2, q, i), "W_tilde: (s^2;q)_i = 0")
    val = (s2 / t2) ** l * qpoch(s2 / t2, q, i - l) * qpoch(t2, q, l) / den
    return val * qpoch(q, q, i) / (qpoch(q, q, i - l) * qpoch(q, q, l))


def W_hat(q, t2, s2, N: int, delta: int, j: int, k: int):
    """Continued q-Hahn weight in the other label pair, restricted to the
    continued label q^N: the infinite Pochhammer ratios collapse to
    (t^2;q)_N and 1/(s^2;q)_{N+delta}."""
    if N < 0:
        raise ValueError("W_hat is defined at alpha = q^N with N >= 0")
    if delta != k - j or delta < 0 or min(j, k) < 0:
        return 0
    den = _guard(
        qpoch(s2, q, N + delta), "W_hat: (s^2;q)_{N+delta} = 0"
    ) * qpoch(q, q, delta)
    val = (s2 / t2) ** N * qpoch(q ** (N + 1), q, delta) * qpoch(s2 / t2, q, delta)
    return val * qpoch(t2, q, N) / den


def _comp_check(n: int, comp):
    if len(comp) != n or any(c < 0 for c in comp):
        raise ValueError(f"bad composition {comp} for {n} colors")


def w_col(q, n: int, u, s, I, a: int, K, b: int):
    """Colored higher spin weight; thin edges carry a color 0..n (0 = empty),
    thick edges carry compositions.  Unlisted configurations weigh 0."""
    _comp_check(n, I)
    _comp_check(n, K)
    if not (0 <= a <= n and 0 <= b <= n):
        raise ValueError("colors must lie in 0..n")
    exp = list(I)
    if a > 0:
        exp[a - 1] += 1
    if b > 0:
        exp[b - 1] -= 1
    if list(K) != exp or min(K) < 0:
        return 0
    den = _guard(1 - s * u, "w_col: 1 - su = 0")

    def tail(c):  # q^{I_{[c+1; n]}}
        return q ** sum(I[c:])

    if a == 0 and b == 0:
        return (1 - s * u * q ** sum(I)) / den
    if a == 0:  # b >= 1
        return s * u * (q ** I[b - 1] - 1) * tail(b) / den
    if b == 0:  # a >= 1
        return (1 - s * s * q ** sum(I)) / den
    if a == b:
        return (s * s * q ** I[a - 1] - s * u) * tail(a) / den
    if a < b:
        return s * u * (q ** I[b - 1] - 1) * tail(b) / den
    return s * s * (q ** I[b - 1] - 1) * tail(b) / den


def W_col(q, t2, s2, I, J, K, L):
    """Colored q-Hahn weight (all edges carry compositions)."""
    n = len(I)
    for comp in (J, K, L):
        _comp_check(n, comp)
    if [i + j for i, j in zip(I, J)] != [k + l for k, l in zip(K, L)]:
        return 0
    if any(ic < lc for ic, lc in zip(I, L)):
        return 0
    ti, tl = sum(I), sum(L)
    den = _guard(qpoch(s2, q, ti), "W_col: (s^2;q)_{|I|} = 0")
    val = (s2 / t2) ** tl * qpoch(s2 / t2, q, ti - tl) * qpoch(t2, q, tl) / den
    below = 0  # L_{[1, c-1]}
    for c in range(n):
        val = val * q ** (below * (I[c] - L[c])) * qpoch(q, q, I[c]) / (
            qpoch(q, q, L[c]) * qpoch(q, q, I[c] - L[c])
        )
        below += L[c]
    return val
