"""The symmetric functions: multi-variable row-operator products, their
normalizations and duals, the one-variable closed form, and the
symmetrization formula for the thin-row family.

Normalization data (the c-products and signed/squared parameter powers) are
finite products over the parts of a partition, rational in the square-root
generators of the parameter view.
"""

from __future__ import annotations

from itertools import permutations
from itertools import product as iproduct

from .lattice import ZW_grid, Zw_grid
from .multipoly import MultiPoly, as_poly
from .params import ParamView
from .partitions import (
    col_mult,
    conjugate,
    contains,
    enum_interlacing_below,
    enum_vstrip_below,
    interlaces,
    part,
    size,
)
from .rowops import c_coeff, op_Bstar_elem, op_Btilde_elem, op_C_elem
from .scalars import PoleError, Rat, qpoch


# ------------------------------------------------------- normalization data


def norm_c(v: ParamView, lam):
    """c(lam) = prod_i (s_i^2;q)_{lam_i - lam_{i+1}} / (q;q)_{...}."""
    out = Rat(1)
    for i in range(1, len(lam) + 1):
        m = col_mult(lam, i)
        if m == 0:
            continue
        out = out * qpoch(v.s(i) ** 2, v.q, m) / qpoch(v.q, v.q, m)
    return out


def pow_signed(v: ParamView, lam):
    """(-S)^lam = prod_i (-s_{i-1})^{lam_i}."""
    out = Rat(1)
    for i in range(1, len(lam) + 1):
        out = out * (-v.s(i - 1)) ** lam[i - 1]
    return out


def pow_squared(v: ParamView, lam):
    """(S)^{2 lam} = prod_i s_{i-1}^{2 lam_i}."""
    out = Rat(1)
    for i in range(1, len(lam) + 1):
        out = out * (v.s(i - 1) ** 2) ** lam[i - 1]
    return out


def _maybe_poly(value, kappas):
    for k in kappas:
        if isinstance(k, MultiPoly):
            return as_poly(value, k.nvars)
    return value


# ------------------------------------------------- thick family (n rows)


def F_s(lam, mu, kappas, v: ParamView):
    """Row-operator product <lam| C(k_1|tau) ... C(k_n|tau^n) |mu>."""
    n = len(kappas)
    if n == 0:
        return 1 if tuple(lam) == tuple(mu) else 0

    def rec(i, cur):
        if i == n:
            return op_C_elem(kappas[i - 1], v.mixed(i), cur, mu)
        total = 0
        for nxt in enum_interlacing_below(cur):
            if not contains(nxt, mu):
                continue
            val = op_C_elem(kappas[i - 1], v.mixed(i), cur, nxt)
            if val == 0:
                continue
            total = total + val * rec(i + 1, nxt)
        return total

    return _maybe_poly(rec(1, lam), kappas)


def F_s_via_grid(lam, mu, kappas, v: ParamView):
    """Independent oracle: the coefficient-weighted grid sum over the left
    boundary labels a_1 + ... + a_n = lam_1 - mu_1."""
    n = len(kappas)
    if n == 0:
        return 1 if tuple(lam) == tuple(mu) else 0
    need = part(lam, 1) - part(mu, 1)
    if need < 0:
        return 0
    total = 0
    for avec in _weak_compositions(need, n):
        coeff = 1
        for i, a in enumerate(avec):
            w = v.mixed(i + 1)
            coeff = coeff * c_coeff(v.q, w.sxi(0), w.s_over_xi(0), kappas[i], a)
        if coeff == 0:
            continue
        grid = ZW_grid(avec, lam, mu, kappas, v)
        total = total + coeff * grid
    return _maybe_poly(total, kappas)


def _weak_compositions(total, slots):
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, slots - 1):
            yield (first,) + rest


def _f_norm(lam, mu, n, v):
    return (
        pow_signed(v.mixed(n), mu)
        / pow_signed(v, lam)
        * norm_c(v.mixed(n), mu)
        / norm_c(v, lam)
    )


def F(lam, mu, kappas, v: ParamView):
    """The normalized thick-family function (symmetric polynomial in kappas)."""
    return _f_norm(lam, mu, len(kappas), v) * F_s(lam, mu, kappas, v)


def F_star(lam, mu, kappas, v: ParamView):
    n = len(kappas)
    return norm_c(v, lam) / norm_c(v.mixed(n), mu) * F(lam, mu, kappas, v)


def F_s_star(lam, mu, kappas, v: ParamView):
    n = len(kappas)
    scale = (
        pow_squared(v.mixed(n), mu)
        / pow_squared(v, lam)
        * norm_c(v.mixed(n), mu)
        / norm_c(v, lam)
    )
    return scale * F_s(lam, mu, kappas, v)


def F_s_star_via_B(lam, mu, kappas, v: ParamView):
    """Dual route: <mu| B*(k_n|tau^{n-1}) ... B*(k_1|Xi,S) |lam>."""
    n = len(kappas)
    if n == 0:
        return 1 if tuple(lam) == tuple(mu) else 0

    def rec(j, cur):
        # applying B*(k_j | tau^{j-1}) to the current bra from the right
        if j == n:
            return op_Bstar_elem(kappas[j - 1], v.mixed(j - 1), mu, cur)
        total = 0
        for nxt in enum_interlacing_below(cur):
            if not contains(nxt, mu):
                continue
            val = op_Bstar_elem(kappas[j - 1], v.mixed(j - 1), nxt, cur)
            if val == 0:
                continue
            total = total + val * rec(j + 1, nxt)
        return total

    return rec(1, lam)


def F_one_var_closed(lam, mu, kappa, v: ParamView):
    """Fully factorized one-variable value; 0 unless mu < lam (interlacing).

    The half-integer powers (s_i xi_i / s_{i-1} xi_{i-1})^{mu_i / 2} are
    evaluated through the square-root generators, and the kappa-dependence is
    kept in the product form prod (s_i xi_i q^{r-1} - kappa), so kappa may be
    a polynomial indeterminate.
    """
    if not interlaces(lam, mu):
        return 0
    out = 1
    for i in range(1, len(lam) + 1):
        li, mi = part(lam, i), part(mu, i)
        lnext = part(lam, i + 1)
        prod_i = v.sxi(i)
        num = 1
        for r in range(li - mi):
            num = num * (prod_i * v.q**r - kappa)
        num = num * qpoch(kappa * v.s_over_xi(i), v.q, mi - lnext)
        den = (
            qpoch(v.q, v.q, li - mi)
            * qpoch(v.q, v.q, mi - lnext)
            * qpoch(prod_i * v.s_over_xi(i), v.q, li - lnext)
        )
        if den == 0:
            raise PoleError("one-variable closed form: vanishing denominator")
        scale = (
            v.xi(i - 1) ** (-(li - mi))
            * (v.sxi_root(i) / v.sxi_root(i - 1)) ** mi
            * qpoch(v.q, v.q, li - lnext)
        )
        out = out * num * scale / den
    return out


# ----------------------------------------------- thin family (conjugates)


def FHL_s(rho, sigma, us, v: ParamView):
    """Thin-family grid sum; the function's indices are the conjugates of the
    grid boundary partitions: the grid runs over lam = rho', mu = sigma'."""
    lam, mu = conjugate(rho), conjugate(sigma)
    n = len(us)
    if n == 0:
        return 1 if lam == mu else 0
    need = part(lam, 1) - part(mu, 1)
    total = 0
    for avec in iproduct(*([(0, 1)] * n)):
        if sum(avec) != need:
            continue
        coeff = 1
        for i, a in enumerate(avec):
            coeff = coeff * (-us[i] * v.xi(0) * v.s(0)) ** a
        grid = Zw_grid(avec, lam, mu, us, v)
        total = total + coeff * grid
    return total


def FHL(rho, sigma, us, v: ParamView):
    lam, mu = conjugate(rho), conjugate(sigma)
    scale = (
        pow_signed(v, mu) / pow_signed(v, lam) * norm_c(v, mu) / norm_c(v, lam)
    )
    return scale * FHL_s(rho, sigma, us, v)


def FHL_star(rho, sigma, us, v: ParamView):
    lam, mu = conjugate(rho), conjugate(sigma)
    return norm_c(v, lam) / norm_c(v, mu) * FHL(rho, sigma, us, v)


def FHL_s_star(rho, sigma, us, v: ParamView):
    lam, mu = conjugate(rho), conjugate(sigma)
    scale = (
        pow_squared(v, mu) / pow_squared(v, lam) * norm_c(v, mu) / norm_c(v, lam)
    )
    return scale * FHL_s(rho, sigma, us, v)


def FHL_s_star_via_B(rho, sigma, us, v: ParamView):
    """Dual route: <sigma'| B~*(u_n) ... B~*(u_1) |rho'>."""
    lam, mu = conjugate(rho), conjugate(sigma)
    n = len(us)
    if n == 0:
        return 1 if lam == mu else 0

    def rec(j, cur):
        if j == n:
            return op_Btilde_elem(us[j - 1], v, mu, cur)
        total = 0
        for nxt in enum_vstrip_below(cur):
            if not contains(nxt, mu):
                continue
            val = op_Btilde_elem(us[j - 1], v, nxt, cur)
            if val == 0:
                continue
            total = total + val * rec(j + 1, nxt)
        return total

    return rec(1, lam)


# -------------------------------------------------- symmetrization formula


def phi_tilde(k: int, u, v: ParamView):
    """One-part factor of the symmetrization formula; phi_0 = 1 - q."""
    q = v.q
    if k == 0:
        return 1 - q
    den = 1 - v.s(k) * v.xi(k) * u
    if den == 0:
        raise PoleError("phi_tilde: 1 - s_k xi_k u = 0")
    out = v.xi(0) * u * (1 - q) / den
    for j in range(1, k):
        den = 1 - v.s(j) * v.xi(j) * u
        if den == 0:
            raise PoleError("phi_tilde: 1 - s_j xi_j u = 0")
        out = out * (v.xi(j) * u - v.s(j)) / den
    return out


def FHL_symmetrized(lam, us, v: ParamView):
    """Explicit symmetrized formula for the straight (sigma empty) thin
    function; requires n >= l(lam) and pairwise distinct u values."""
    n = len(us)
    if n < len(lam):
        raise ValueError("need at least l(lam) variables")
    if len(set(us)) != n:
        raise ValueError("the symmetrization formula needs distinct u values")
    q = v.q
    parts = tuple(lam) + (0,) * (n - len(lam))
    total = 0
    for order in permutations(range(n)):
        term = 1
        for pos_a in range(n):
            for pos_b in range(pos_a + 1, n):
                ua, ub = us[order[pos_a]], us[order[pos_b]]
                term = term * (ua - q * ub) / (ua - ub)
        for pos in range(n):
            term = term * phi_tilde(parts[pos], us[order[pos]], v)
        total = total + term
    return total / qpoch(q, q, n - len(lam))
