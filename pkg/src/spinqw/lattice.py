"""Row and grid partition functions: the brute-force side of every
row-operator and symmetric-function computation, plus the fused column
stacks.

Row conventions.  An up-right row with top partition ``lam`` and bottom
``mu`` forces the horizontal edge between columns c-1 and c to carry
lam_c - mu_c, with the left boundary label a = lam_1 - mu_1 and the right
boundary 0; all vertices beyond column max(l(lam), l(mu)) have weight 1, so
the semi-infinite row is a finite product.  Up-left (dual) rows carry their
input partition on the bottom and force the same horizontal labels.

Thick row vertices at column c always use the parameter pair
(t^2, s^2) = (s_c xi_c / kappa, s_c^2); the weight is computed in a factored
form polynomial in kappa, so kappa may be a MultiPoly indeterminate.
"""

from __future__ import annotations

from itertools import product as iproduct

from .partitions import (
    col_mult,
    contains,
    enum_interlacing_below,
    enum_vstrip_below,
    interlaces,
    part,
)
from .scalars import PoleError, qpoch
from .weights import W_s_star, w_s, w_s_star


def row_weight_thick(q, prod, ratio, kappa, i, j, k, l):
    """W-weight with t^2 = prod/kappa, s^2 = prod*ratio, polynomial in kappa.

    prod = s_c xi_c and ratio = s_c / xi_c for the row's column c.
    """
    if min(i, j, k, l) < 0 or i + j != k + l or i < l:
        return 0
    s2 = prod * ratio
    den = qpoch(s2, q, i)
    if den == 0:
        raise PoleError("row weight: (s^2;q)_i = 0")
    num = qpoch(kappa * ratio, q, i - l)
    for r in range(l):
        num = num * (kappa - prod * q**r)
    scale = ratio**l * qpoch(q, q, i) / (den * qpoch(q, q, i - l) * qpoch(q, q, l))
    return num * scale


def zw_row(a: int, lam, mu, kappa, v):
    """One thick row: <lam| T_a(kappa | view) |mu> as a product of weights."""
    if part(lam, 1) != part(mu, 1) + a or not interlaces(lam, mu):
        return 0
    out = 1
    for c in range(1, len(lam) + 1):
        out = out * row_weight_thick(
            v.q,
            v.sxi(c),
            v.s_over_xi(c),
            kappa,
            col_mult(mu, c),
            part(lam, c) - part(mu, c),
            col_mult(lam, c),
            part(lam, c + 1) - part(mu, c + 1),
        )
    return out


def w_row(a: int, lam, mu, u, v):
    """One thin row of up-right vertices (vertical strip lam/mu)."""
    if part(lam, 1) != part(mu, 1) + a or not _vstrip(lam, mu):
        return 0
    out = 1
    for c in range(1, len(lam) + 1):
        out = out * w_s(
            v.q,
            u * v.xi(c),
            v.s(c),
            col_mult(mu, c),
            part(lam, c) - part(mu, c),
            col_mult(lam, c),
            part(lam, c + 1) - part(mu, c + 1),
        )
    return out


def wstar_row(a: int, lam, mu, u, v):
    """One thin dual row: <mu| T*_a(u | view) |lam> (vertical strip lam/mu)."""
    if part(lam, 1) != part(mu, 1) + a or not _vstrip(lam, mu):
        return 0
    out = 1
    for c in range(1, len(lam) + 1):
        out = out * w_s_star(
            v.q,
            u * v.xi(c),
            v.s(c),
            col_mult(lam, c),
            part(lam, c + 1) - part(mu, c + 1),
            col_mult(mu, c),
            part(lam, c) - part(mu, c),
        )
    return out


def Wstar_row(lam, mu, kappa, v):
    """One thick dual row (no prefactor): the product in <mu| T*_a |lam>."""
    if not interlaces(lam, mu):
        return 0
    out = 1
    for c in range(1, len(lam) + 1):
        out = out * W_s_star(
            v.q,
            v.sxi(c) / kappa,
            v.sxi(c) * v.s_over_xi(c),
            col_mult(lam, c),
            part(lam, c + 1) - part(mu, c + 1),
            col_mult(mu, c),
            part(lam, c) - part(mu, c),
        )
    return out


def _vstrip(lam, mu) -> bool:
    return contains(lam, mu) and all(
        part(lam, c) - part(mu, c) in (0, 1) for c in range(1, len(lam) + 1)
    )


# ------------------------------------------------------------------- grids


def ZW_grid(avec, lam, mu, kappas, v):
    """n-row grid of thick rows; row i uses kappa_i and the i-fold mixed
    shift, top boundary lam, bottom mu, prescribed left labels avec."""
    n = len(avec)
    if len(kappas) != n:
        raise ValueError("need one kappa per row")
    if n == 0:
        return 1 if lam == mu else 0

    def descend(i, cur):
        if i == n:
            return zw_row(avec[i - 1], cur, mu, kappas[i - 1], v.mixed(i))
        total = 0
        for nxt in enum_interlacing_below(cur):
            if part(cur, 1) - part(nxt, 1) != avec[i - 1]:
                continue
            if not contains(nxt, mu):
                continue
            rowval = zw_row(avec[i - 1], cur, nxt, kappas[i - 1], v.mixed(i))
            if rowval == 0:
                continue
            total = total + rowval * descend(i + 1, nxt)
        return total

    return descend(1, lam)


def Zw_grid(avec, lam, mu, us, v):
    """n-row grid of thin rows; row i uses u_i and the unshifted parameters."""
    n = len(avec)
    if len(us) != n:
        raise ValueError("need one u per row")
    if n == 0:
        return 1 if lam == mu else 0

    def descend(i, cur):
        if i == n:
            return w_row(avec[i - 1], cur, mu, us[i - 1], v)
        total = 0
        for nxt in enum_vstrip_below(cur):
            if part(cur, 1) - part(nxt, 1) != avec[i - 1]:
                continue
            if not contains(nxt, mu):
                continue
            rowval = w_row(avec[i - 1], cur, nxt, us[i - 1], v)
            if rowval == 0:
                continue
            total = total + rowval * descend(i + 1, nxt)
        return total

    return descend(1, lam)


# --------------------------------------------------------- brute-force rows


class RowSpec:
    """A row to be summed by brute force: family 'W' | 'w' | 'W*' | 'w*',
    the spectral parameter (kappa or u), boundary partitions and left label."""

    def __init__(self, family, a, lam, mu, param, v, width=None):
        if family not in ("W", "w", "W*", "w*"):
            raise ValueError(f"unknown row family {family!r}")
        self.family = family
        self.a = a
        self.lam = lam
        self.mu = mu
        self.param = param
        self.v = v
        self.width = width or max(len(lam), len(mu)) + 1

    def weight(self, c, left, right):
        v, q = self.v, self.v.q
        i_bot, k_top = col_mult(self.mu, c), col_mult(self.lam, c)
        if self.family == "W":
            return row_weight_thick(
                q, v.sxi(c), v.s_over_xi(c), self.param, i_bot, left, k_top, right
            )
        if self.family == "w":
            return w_s(q, self.param * v.xi(c), v.s(c), i_bot, left, k_top, right)
        # dual families carry the lam-multiplicities on the bottom
        i_bot, k_top = col_mult(self.lam, c), col_mult(self.mu, c)
        if self.family == "W*":
            return W_s_star(
                q,
                v.sxi(c) / self.param,
                v.sxi(c) * v.s_over_xi(c),
                i_bot,
                right,
                k_top,
                left,
            )
        return w_s_star(
            q, self.param * v.xi(c), v.s(c), i_bot, right, k_top, left
        )


def brute_force_row(spec: RowSpec, cap: int):
    """Sum the row's weight products over ALL horizontal label assignments up
    to the cap, without conservation shortcuts.  Must equal the
    conservation-forced product; this is the oracle for the row functions."""
    width = spec.width
    label_range = range((1 if spec.family in ("w", "w*") else cap) + 1)
    total = 0
    for inner in iproduct(*([label_range] * (width - 1))):
        edges = (spec.a,) + inner + (0,)
        prod = 1
        for c in range(1, width + 1):
            prod = prod * spec.weight(c, edges[c - 1], edges[c])
            if prod == 0:
                break
        total = total + prod
    return total


# ----------------------------------------------------------- fused columns


def fusion_norm(q, J: int, j: int):
    """Z_j(J) = q^{j(j-1)/2} (q;q)_J / ((q;q)_j (q;q)_{J-j})."""
    if j < 0 or j > J:
        return 0
    return (
        q ** (j * (j - 1) // 2)
        * qpoch(q, q, J)
        / (qpoch(q, q, j) * qpoch(q, q, J - j))
    )


def _column_pf(q, J, u, s, i, k, avec, bvec):
    g = i
    out = 1
    for r in range(J):
        g2 = g + avec[r] - bvec[r]
        if g2 < 0:
            return 0
        out = out * w_s(q, q**r * u, s, g, avec[r], g2, bvec[r])
        g = g2
    return out if g == k else 0


def stack_columns_fused(q, J: int, u, s, i, j, k, l, bchoice=None):
    """The fused weight evaluated from its defining column stack of J thin
    vertices with spectral parameters u, qu, ..., q^{J-1}u; independent of
    the placement bchoice of the l outgoing labels (q-exchangeability)."""
    if not 0 <= j <= J or not 0 <= l <= J:
        raise ValueError("fused horizontal labels must lie in 0..J")
    b = tuple(bchoice) if bchoice is not None else (1,) * l + (0,) * (J - l)
    if sum(b) != l or len(b) != J:
        raise ValueError("bchoice must place exactly l unit labels")
    pref = (
        fusion_norm(q, J, l)
        / fusion_norm(q, J, j)
        * q ** (-sum(r * b[r] for r in range(J)))
    )
    total = 0
    for avec in iproduct(*([(0, 1)] * J)):
        if sum(avec) != j:
            continue
        total = total + q ** sum(r * avec[r] for r in range(J)) * _column_pf(
            q, J, u, s, i, k, avec, b
        )
    return pref * total


def _dual_column_pf(q, J, s, i, k, avec, bvec):
    # vertices bottom-to-top use parameters s q^{J-1}, ..., qs, s and the
    # label pairs (a_J, b_J), ..., (a_1, b_1)
    g = i
    out = 1
    for p in range(1, J + 1):
        r = J - p  # 0-based index of (a,b) used at height p
        g2 = g + bvec[r] - avec[r]
        if g2 < 0:
            return 0
        out = out * w_s_star(q, s * q ** (J - p), s, g, bvec[r], g2, avec[r])
        g = g2
    return out if g == k else 0


def stack_columns_dual_fused(q, J: int, s, i, l, k, j, bchoice=None):
    """The dual fused weight with t^2 = q^{-J}, evaluated from its defining
    dual column stack; argument order matches W_s_star(i, l; k, j)."""
    b = tuple(bchoice) if bchoice is not None else (1,) * l + (0,) * (J - l)
    if sum(b) != l or len(b) != J:
        raise ValueError("bchoice must place exactly l unit labels")
    sign = -1 if (j - l) % 2 else 1
    pref = sign * q ** (-i * J) * q ** (-sum(r * b[r] for r in range(J)))
    total = 0
    for avec in iproduct(*([(0, 1)] * J)):
        if sum(avec) != j:
            continue
        total = total + q ** sum(r * avec[r] for r in range(J)) * _dual_column_pf(
            q, J, s, i, k, avec, b
        )
    return pref * total
