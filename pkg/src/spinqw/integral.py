"""Contour-integral evaluation of the thick family and the thin-family
orthogonality pairing, by trapezoidal quadrature on origin-centered circles.

The circle must separate the point sets {s_i/xi_i : i >= 1} (inside) and
{1/(s_i xi_i) : i >= 1} (outside); q C lies inside C automatically for
|q| < 1.  Trapezoid nodes on a circle converge geometrically for integrands
analytic in a neighborhood of the contour, so modest node counts give
near machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .params import ParamView
from .partitions import conjugate, part


class ContourError(ValueError):
    """No admissible circle exists for these parameters."""


@dataclass(frozen=True)
class Contour:
    radius: float
    nodes: int
    inner: float  # largest enclosed pole radius, max_i s_i/xi_i
    outer: float  # smallest excluded pole radius, min_i 1/(s_i xi_i)
    margin: float
    index0_conforms: bool  # whether the i = 0 points also respect the circle


def _float_params(v: ParamView, count: int):
    s = [float(v.s(i)) for i in range(count + 1)]
    xi = [float(v.xi(i)) for i in range(count + 1)]
    return s, xi


def build_contour(v: ParamView, count: int | None = None, margin: float = 1e-3,
                  nodes: int = 256) -> Contour:
    """Circle radius = geometric mean of the two pole bounds (i >= 1)."""
    q = abs(float(v.q))
    if q >= 1:
        raise ContourError("contour construction needs |q| < 1")
    count = count if count is not None else v.base.horizon - v.off - v.shift
    s, xi = _float_params(v, count)
    inner_pts = [s[i] / xi[i] for i in range(1, count + 1)]
    outer_pts = [1.0 / (s[i] * xi[i]) for i in range(1, count + 1)]
    inner, outer = max(inner_pts), min(outer_pts)
    if inner <= 0 or outer <= 0 or outer / inner < 1 + margin:
        raise ContourError(
            f"no circle separates the pole sets: inner {inner}, outer {outer}"
        )
    radius = math.sqrt(inner * outer)
    index0_ok = s[0] / xi[0] < radius < 1.0 / (s[0] * xi[0])
    return Contour(radius, nodes, inner, outer, margin, index0_ok)


def _nodes(contour: Contour, factor: float = 1.0):
    angles = 2 * np.pi * np.arange(contour.nodes) / contour.nodes
    return contour.radius * factor * np.exp(1j * angles)


def integral_F(mu, kappas, v: ParamView, nodes: int = 256,
               radius: float | None = None):
    """Quadrature value of the thick straight function at numeric kappas."""
    k = part(mu, 1)
    if k == 0:
        return complex(1.0)
    count = max(len(mu), 1)
    if radius is None:
        contour = build_contour(v, nodes=nodes)
    else:
        base = build_contour(v, nodes=nodes)
        contour = Contour(radius, nodes, base.inner, base.outer, base.margin,
                          base.index0_conforms)
    if k > 3:
        raise ValueError("quadrature is implemented for mu_1 <= 3")
    q = float(v.q)
    s, xi = _float_params(v, max(count, part(conjugate(mu), 1), len(kappas)) + 1)
    z = _nodes(contour)
    muc = conjugate(mu)

    def g_full(alpha):
        m = muc[alpha - 1]
        out = (1.0 / xi[0]) / (z - s[m] / xi[m])
        for j in range(1, m):
            out = out * (1 - s[j] * xi[j] * z) / (z * xi[j] - s[j])
        for i, kap in enumerate(kappas, start=1):
            out = out * (1 - z * float(kap)) / (1 - z * xi[i] * s[i])
        return out

    gs = [g_full(alpha) for alpha in range(1, k + 1)]
    if k == 1:
        return complex(np.mean(gs[0]))
    V = {}
    for a in range(k):
        for b in range(a + 1, k):
            V[(a, b)] = (z[:, None] - z[None, :]) / (z[:, None] - q * z[None, :])
    M = nodes
    if k == 2:
        total = np.einsum("ab,a,b->", V[(0, 1)], gs[0], gs[1])
        return complex(total / M**2)
    T = np.einsum("ab,ac,a->bc", V[(0, 1)], V[(0, 2)], gs[0])
    total = np.einsum("bc,bc,b,c->", T, V[(1, 2)], gs[1], gs[2])
    return complex(total / M**3)


def phi_tilde_numeric(k: int, u, q: float, s, xi):
    """phi-factor of the symmetrization formula on float/complex arrays."""
    if k == 0:
        return (1 - q) * np.ones_like(u)
    out = xi[0] * u * (1 - q) / (1 - s[k] * xi[k] * u)
    for j in range(1, k):
        out = out * (xi[j] * u - s[j]) / (1 - s[j] * xi[j] * u)
    return out


def fhl_symmetrized_numeric(lam, us, q: float, s, xi):
    """The thin-family symmetrization formula on complex node arrays."""
    n = len(us)
    parts = tuple(lam) + (0,) * (n - len(lam))
    total = 0
    for order in permutations(range(n)):
        term = 1
        for a in range(n):
            for b in range(a + 1, n):
                ua, ub = us[order[a]], us[order[b]]
                term = term * (ua - q * ub) / (ua - ub)
        for pos in range(n):
            term = term * phi_tilde_numeric(parts[pos], us[order[pos]], q, s, xi)
        total = total + term
    norm = 1.0
    for i in range(1, n - len(lam) + 1):
        norm *= 1 - q**i
    return total / norm


def orthogonality_pairing(lam, mu, L: int, v: ParamView, nodes: int = 192,
                          radius_spread: float = 0.08):
    """L-fold quadrature of the orthogonality display; approaches 1 if
    lam == mu and 0 otherwise.  Distinct radii per variable keep the
    symmetrization formula away from its removable diagonal singularities."""
    if len(mu) > L:
        raise ValueError("need l(mu) <= L")
    if L == 0:
        return complex(1.0 if lam == mu == () else 0.0)
    if len(lam) > L:
        return complex(0.0)  # the thin function vanishes in fewer variables
    if L > 2:
        raise ValueError("quadrature is implemented for L <= 2")
    from .functions import norm_c
    from .scalars import qpoch

    q = float(v.q)
    depth = max(part(conjugate(lam), 1), len(lam), len(mu), L) + 2
    s, xi = _float_params(v, depth)
    xibar = [1.0 / x for x in xi]
    contour = build_contour(v, nodes=nodes)
    zs = [
        _nodes(contour, factor=1.0 + radius_spread * j) for j in range(L)
    ]
    # the c-normalization carries the conjugate index (the variant the
    # integral representation's derivation actually uses)
    prefactor = float(qpoch(v.q, v.q, L - len(mu))) * float(
        norm_c(v, conjugate(lam))
    ) / (1 - q) ** L
    mus = tuple(mu) + (0,) * (L - len(mu))
    if L == 1:
        z = zs[0]
        vals = fhl_symmetrized_numeric(lam, (z,), q, s, xi)
        vals = vals * phi_tilde_numeric(mus[0], 1 / z, q, s, xibar)
        return complex(prefactor * np.mean(vals))
    z1 = zs[0][:, None]
    z2 = zs[1][None, :]
    vander = (z1 - z2) / (z1 - q * z2)
    vals = fhl_symmetrized_numeric(lam, (z1, z2), q, s, xi)
    vals = vals * phi_tilde_numeric(mus[0], 1 / z1, q, s, xibar)
    vals = vals * phi_tilde_numeric(mus[1], 1 / z2, q, s, xibar)
    total = np.mean(vander * vals)
    return complex(prefactor * total)
