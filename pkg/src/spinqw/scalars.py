"""Scalar arithmetic kernels shared by all modules.

Two scalar modes are used throughout the package: exact rationals (``Rat``,
arbitrary precision, always in lowest terms) for identity verification, and
ordinary floats / complex numbers for truncated products and quadrature.
All functions below are pure; values are immutable.
"""

from __future__ import annotations

import math
import random

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is an optional accelerator
    from fractions import Fraction as Rat


class PoleError(ArithmeticError):
    """A weight or normalization was evaluated at a pole of its formula."""


class HorizonError(IndexError):
    """A parameter sequence was accessed beyond its declared horizon."""


def rat(num, den=1):
    """Exact rational num/den."""
    return Rat(num, den)


def parse_rational(text: str):
    """Parse "p/q" or "p" (optional sign, no whitespace) into a Rat."""
    if not isinstance(text, str) or text != text.strip() or " " in text:
        raise ValueError(f"bad rational literal: {text!r}")
    if "/" in text:
        num, _, den = text.partition("/")
        return Rat(int(num), int(den))
    return Rat(int(text))


def fmt_rational(x) -> str:
    """Canonical "p/q" (or "p") form of an exact rational."""
    x = Rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def qpoch(x, q, n: int):
    """Finite q-Pochhammer (x;q)_n = prod_{i=1}^n (1 - x q^{i-1}), (x;q)_0 = 1.

    Generic in x: works for Rat, float, complex and MultiPoly operands.
    """
    if n < 0:
        raise ValueError("q-Pochhammer order must be nonnegative")
    out = 1
    qp = 1
    for _ in range(n):
        out = out * (1 - x * qp)
        qp = qp * q
    return out


def qpoch_inf_index(x, q, tol: float) -> int:
    """Truncation index k with tail bound |x||q|^k / (1-|q|) < tol."""
    aq = abs(q)
    if aq >= 1:
        raise ValueError("(x;q)_inf requires |q| < 1")
    ax = abs(x)
    if ax == 0:
        return 0
    k = math.log(tol * (1 - aq) / ax) / math.log(aq)
    return max(0, math.ceil(k)) + 1


def qpoch_inf(x, q, tol: float = 1e-14):
    """Numeric (x;q)_inf via the deterministic truncation of qpoch_inf_index."""
    x = complex(x) if isinstance(x, complex) else float(x)
    q = float(q)
    n = qpoch_inf_index(x, q, tol)
    return qpoch(x, q, n)


def rand_rat(rng: random.Random, bound: int = 97, signed: bool = True):
    """One random rational p/q with 1 <= p, q <= bound, random sign."""
    num = rng.randint(1, bound)
    den = rng.randint(1, bound)
    if signed and rng.random() < 0.5:
        num = -num
    return Rat(num, den)


def rand_rats(rng: random.Random, count: int, bound: int = 97, signed: bool = True):
    return tuple(rand_rat(rng, bound, signed) for _ in range(count))
