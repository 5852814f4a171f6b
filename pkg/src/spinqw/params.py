"""Inhomogeneity sequences with exact square-root generators and shift views.

The two parameter sequences are materialized through their square roots
rs[i] = sqrt(s_i), rx[i] = sqrt(xi_i): every expression the package needs
(mixed-shifted values, half-integer powers of s_i xi_i) is a rational function
of these generators, so fixing them as concrete rationals fixes a consistent
branch of all square roots at once.

A ParamView is a cheap immutable handle (base, plain offset o, mixed shift k)
whose accessors return the values of the k-fold mixed-shifted pair
(tau_S^k Xi, tau_Xi^k S) after dropping the first o entries.  Any access past
the declared horizon is a hard error, never a silent extension.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .scalars import HorizonError, Rat, fmt_rational, parse_rational, rand_rat


@dataclass(frozen=True)
class ParameterBase:
    q: object
    rs: tuple  # rs[i] = sqrt(s_i)
    rx: tuple  # rx[i] = sqrt(xi_i)
    horizon: int

    def __post_init__(self):
        if len(self.rs) != len(self.rx):
            raise ValueError("sqrt_s and sqrt_xi must have equal length")
        if self.horizon >= len(self.rs):
            raise ValueError("horizon exceeds the supplied generators")
        if any(v == 0 for v in self.rs) or any(v == 0 for v in self.rx):
            raise ValueError("generators must be nonzero")


class ParamView:
    __slots__ = ("base", "off", "shift")

    def __init__(self, base: ParameterBase, off: int = 0, shift: int = 0):
        self.base = base
        self.off = off
        self.shift = shift

    @property
    def q(self):
        return self.base.q

    def _idx(self, i: int) -> int:
        j = i + self.off
        if j < 0 or j + self.shift > self.base.horizon:
            raise HorizonError(
                f"index {i} (offset {self.off}, shift {self.shift}) exceeds "
                f"horizon {self.base.horizon}"
            )
        return j

    def s(self, i: int):
        """s_i of the mixed-shifted sequence: rs[j+k] rx[j+k] rs[j] / rx[j]."""
        j = self._idx(i)
        rs, rx = self.base.rs, self.base.rx
        return rs[j + self.shift] * rx[j + self.shift] * rs[j] / rx[j]

    def xi(self, i: int):
        """xi_i of the mixed-shifted sequence (rs and rx swapped in the factor)."""
        j = self._idx(i)
        rs, rx = self.base.rs, self.base.rx
        return rx[j + self.shift] * rs[j + self.shift] * rx[j] / rs[j]

    def sxi(self, i: int):
        """s_i xi_i; depends only on i + o + k."""
        j = self._idx(i) + self.shift
        return (self.base.rs[j] * self.base.rx[j]) ** 2

    def sxi_root(self, i: int):
        """sqrt(s_i xi_i) = rs rx at the shifted index; depends only on i + o + k."""
        j = self._idx(i) + self.shift
        return self.base.rs[j] * self.base.rx[j]

    def s_over_xi(self, i: int):
        """s_i / xi_i; depends only on i + o (mixed shifts leave it fixed)."""
        j = self._idx(i)
        return (self.base.rs[j] / self.base.rx[j]) ** 2

    def mixed(self, k: int = 1) -> "ParamView":
        """View of the pair after k more mixed shifts (composes additively)."""
        if k < 0:
            raise ValueError("mixed shift must be nonnegative")
        return ParamView(self.base, self.off, self.shift + k)

    def plain(self, n: int) -> "ParamView":
        """View after dropping the first n entries of both sequences."""
        if n < 0:
            raise ValueError("plain shift must be nonnegative")
        return ParamView(self.base, self.off + n, self.shift)

    def __repr__(self):
        return f"ParamView(off={self.off}, shift={self.shift})"


def view(base: ParameterBase) -> ParamView:
    return ParamView(base)


def mixed_shift_pair(xi_view: ParamView, s_view: ParamView, k: int):
    """(tau_S^k Xi, tau_Xi^k S) as a pair of views sharing a base."""
    if xi_view.base is not s_view.base:
        raise ValueError("views must share a ParameterBase")
    if (xi_view.off, xi_view.shift) != (s_view.off, s_view.shift):
        raise ValueError("views must be aligned")
    return xi_view.mixed(k), s_view.mixed(k)


def make_xi_equals_s(base: ParameterBase) -> ParameterBase:
    """Specialization Xi = S (rx := rs); mixed shift becomes the plain shift."""
    return ParameterBase(base.q, base.rs, base.rs, base.horizon)


def make_xi_equals_sbar(base: ParameterBase) -> ParameterBase:
    """Specialization Xi = (1/s_0, 1/s_1, ...); mixed shift fixes the pair."""
    return ParameterBase(
        base.q, base.rs, tuple(1 / v for v in base.rs), base.horizon
    )


def make_xi_bar(base: ParameterBase) -> ParameterBase:
    """Invert the xi-sequence only (rx := 1/rx), keeping S."""
    return ParameterBase(
        base.q, base.rs, tuple(1 / v for v in base.rx), base.horizon
    )


def hat_base(base: ParameterBase) -> ParameterBase:
    """Prepend the generator pair (1, 1): Xi-hat = (1, xi_0, ...), same for S."""
    one = Rat(1)
    return ParameterBase(
        base.q, (one,) + tuple(base.rs), (one,) + tuple(base.rx), base.horizon + 1
    )


def fixture_p0(horizon: int = 16) -> ParameterBase:
    """Pinned test fixture: q = 1/3, sqrt(s_i) = 1/(i+2), sqrt(xi_i) = 1/(i+3)."""
    rs = tuple(Rat(1, i + 2) for i in range(horizon + 1))
    rx = tuple(Rat(1, i + 3) for i in range(horizon + 1))
    return ParameterBase(Rat(1, 3), rs, rx, horizon)


def random_base(rng, horizon: int, bound: int = 97) -> ParameterBase:
    """Random rational generators (nonzero, both signs) and random q != 0, 1."""
    while True:
        q = rand_rat(rng, bound)
        if q != 0 and abs(q) != 1:
            break
    rs = tuple(rand_rat(rng, bound) for _ in range(horizon + 1))
    rx = tuple(rand_rat(rng, bound) for _ in range(horizon + 1))
    return ParameterBase(q, rs, rx, horizon)


def base_to_json(base: ParameterBase) -> dict:
    return {
        "q": fmt_rational(base.q),
        "sqrt_s": [fmt_rational(v) for v in base.rs],
        "sqrt_xi": [fmt_rational(v) for v in base.rx],
        "horizon": base.horizon,
    }


def base_from_json(data: dict) -> ParameterBase:
    return ParameterBase(
        parse_rational(data["q"]),
        tuple(parse_rational(v) for v in data["sqrt_s"]),
        tuple(parse_rational(v) for v in data["sqrt_xi"]),
        int(data["horizon"]),
    )


def load_params(path: str) -> ParameterBase:
    with open(path, "r", encoding="utf-8") as fh:
        return base_from_json(json.load(fh))
