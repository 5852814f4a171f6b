"""Row operators on the partition basis: matrix elements of the transfer
rows, their normalized linear combinations, and the infinite-0th-column
limit construct.

Matrix-element conventions (out = bra, inn = ket):

* ``op_T_elem`` / ``op_C_elem``: <lam| T_a(kappa) |mu> adds a horizontal
  strip (mu < lam interlacing, lam_1 = mu_1 + a);
* ``op_Bstar_elem``: <mu| B*(kappa) |lam> removes a horizontal strip
  (mu < lam interlacing), carrying the (kappa / s_0 xi_0)^{lam_1} prefactor;
* ``op_Btilde_elem``: <out| B~*(u) |inn> removes a vertical strip
  (inn_c - out_c in {0,1} for every column, so the conjugates interlace).

The combination C is not a bona fide operator (its image on a basis vector
is an infinite sum), so it is only ever exposed through matrix elements and
box-bounded generators, mirroring the infinite-matrix discipline the
supports justify.
"""

from __future__ import annotations

from .lattice import Wstar_row, wstar_row, zw_row
from .params import ParamView, hat_base
from .partitions import (
    add_first_part,
    contains,
    enum_interlacing_above,
    interlaces,
    part,
)
from .scalars import qpoch


def c_coeff(q, prod0, ratio0, kappa, a: int):
    """(kappa s_0/xi_0)^a (kappa^{-1} s_0 xi_0; q)_a / (q;q)_a in the
    pole-free factored form, polynomial in kappa."""
    if a < 0:
        return 0
    num = 1
    for r in range(a):
        num = num * (kappa - prod0 * q**r)
    return num * (ratio0**a / qpoch(q, q, a))


def op_T_elem(a: int, kappa, v: ParamView, lam, mu):
    """<lam| T_a(kappa | view) |mu>."""
    return zw_row(a, lam, mu, kappa, v)


def op_C_elem(kappa, v: ParamView, lam, mu):
    """<lam| C(kappa | view) |mu>: the coefficient-weighted T element."""
    a = part(lam, 1) - part(mu, 1)
    if a < 0 or not interlaces(lam, mu):
        return 0
    coeff = c_coeff(v.q, v.sxi(0), v.s_over_xi(0), kappa, a)
    return coeff * zw_row(a, lam, mu, kappa, v)


def op_Bstar_elem(kappa, v: ParamView, mu, lam):
    """<mu| B*(kappa | view) |lam>."""
    if not interlaces(lam, mu):
        return 0
    return (kappa / v.sxi(0)) ** part(lam, 1) * Wstar_row(lam, mu, kappa, v)


def op_Btilde_elem(u, v: ParamView, out, inn):
    """<out| B~*(u | view) |inn>."""
    a = part(inn, 1) - part(out, 1)
    if a not in (0, 1):
        return 0
    return (-u * v.xi(0) / v.s(0)) ** a * wstar_row(a, inn, out, u, v)


# -------------------------------------------------------------- sparse ops


class SparseOp:
    """Lazily materialized operator: gen(mu, box) lists the (lam, coeff)
    image of |mu> within the box (max_rows, max_cols).  Declared growth
    bounds: <lam|M|mu> = 0 unless l(lam) <= l(mu) + grow_rows and
    lam_1 >= mu_1 - shrink_cols."""

    def __init__(self, gen, grow_rows: int, shrink_cols: int):
        self.gen = gen
        self.grow_rows = grow_rows
        self.shrink_cols = shrink_cols

    @classmethod
    def identity(cls):
        return cls(lambda mu, box: [(mu, 1)], 0, 0)

    @classmethod
    def from_C(cls, kappa, v: ParamView):
        def gen(mu, box):
            rows, cols = box
            out = []
            for lam in enum_interlacing_above(mu, cols):
                val = op_C_elem(kappa, v, lam, mu)
                if val != 0:
                    out.append((lam, val))
            return out

        return cls(gen, 1, 0)

    @classmethod
    def from_Btilde(cls, u, v: ParamView):
        from .partitions import enum_vstrip_below

        def gen(mu, box):
            out = []
            for lam in enum_vstrip_below(mu):
                val = op_Btilde_elem(u, v, lam, mu)
                if val != 0:
                    out.append((lam, val))
            return out

        return cls(gen, 0, 1)


class BoxOverflow(ValueError):
    """A generated partition left the declared bounding box."""


def apply_op(op: SparseOp, state, box):
    """Apply a SparseOp to a weighted list of partitions inside box =
    (max_rows, max_cols); coefficients are combined exactly and partitions
    leaving the box raise BoxOverflow."""
    rows, cols = box
    acc = {}
    for mu, c in state:
        if c == 0:
            continue
        for lam, w in op.gen(mu, box):
            if len(lam) > rows or part(lam, 1) > cols:
                raise BoxOverflow(f"partition {lam} exceeds box {box}")
            new = acc.get(lam, 0) + c * w
            if new == 0:
                acc.pop(lam, None)
            else:
                acc[lam] = new
    return sorted(acc.items())


# ------------------------------------------------- infinite 0th column


def hat_extend(lam, n: int):
    """The partition (n, lam_1, lam_2, ...) with n >= lam_1."""
    return add_first_part(lam, n)


def hat_view(v: ParamView) -> ParamView:
    """View over the hat-extended base (generator pair (1,1) prepended);
    only unshifted views extend unambiguously."""
    if v.off != 0 or v.shift != 0:
        raise ValueError("hat extension is defined on unshifted views")
    return ParamView(hat_base(v.base))


def infcol_C_approx(kappa, v: ParamView, lam, mu, n_col: int, a: int = 0):
    """The N-truncated hat matrix element whose limit (after the infinite
    Pochhammer prefactor) is <lam| C(kappa) |mu>; exact rational for each N."""
    hv = hat_view(v)
    return op_T_elem(
        a, kappa, hv, hat_extend(lam, n_col + a), hat_extend(mu, n_col)
    )


def infcol_Btilde_approx(u, v: ParamView, out, inn, n_col: int, i: int = 0):
    """The N-truncated hat matrix element whose limit (after 1 - u s_0 xi_0)
    is <out| B~*(u) |inn>; exact rational for each N."""
    if i not in (0, 1):
        raise ValueError("the thin left label must be 0 or 1")
    hv = hat_view(v)
    return wstar_row(
        part(hat_extend(inn, n_col), 1) - part(hat_extend(out, n_col - i), 1),
        hat_extend(inn, n_col),
        hat_extend(out, n_col - i),
        u,
        hv,
    )
