"""Sparse multivariate polynomials over exact rationals.

Used to carry the kappa-variables of the symmetric functions symbolically, so
that symmetry can be checked as literal coefficient equality.  Exponent keys
are full-length tuples (one slot per variable); zero coefficients are never
stored.
"""

from __future__ import annotations

from .scalars import Rat, fmt_rational, parse_rational


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for exp, coef in (terms or {}).items():
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {nvars} variables")
            if coef != 0:
                clean[tuple(exp)] = Rat(coef)
        self.terms = clean

    @classmethod
    def const(cls, nvars: int, value):
        return cls(nvars, {(0,) * nvars: Rat(value)})

    @classmethod
    def variable(cls, nvars: int, index: int):
        """The monomial x_index (0-based)."""
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): Rat(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            new = terms.get(exp, 0) + coef
            if new == 0:
                terms.pop(exp, None)
            else:
                terms[exp] = new
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly(self.nvars)
            c = Rat(other)
            return MultiPoly(self.nvars, {e: k * c for e, k in self.terms.items()})
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exp, 0) + c1 * c2
                if new == 0:
                    terms.pop(exp, None)
                else:
                    terms[exp] = new
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            raise TypeError("division only by scalars")
        return self * (Rat(1) / Rat(other))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = MultiPoly.const(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if not self.terms:
            return other == 0
        const = self.terms.get((0,) * self.nvars)
        return len(self.terms) == 1 and const is not None and const == other

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def evaluate(self, point):
        """Exact evaluation at a point (length must equal nvars)."""
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        total = 0
        for exp, coef in self.terms.items():
            term = coef
            for x, e in zip(point, exp):
                for _ in range(e):
                    term = term * x
            total = total + term
        return total

    def permuted(self, perm):
        """Polynomial with variables reindexed: new var perm[i] <- old var i."""
        terms = {}
        for exp, coef in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exp):
                new[perm[i]] = e
            terms[tuple(new)] = coef
        return MultiPoly(self.nvars, terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def min_total_degree(self) -> int:
        """Lowest total degree among stored monomials (0 for the zero polynomial)."""
        return min((sum(e) for e in self.terms), default=0)

    def to_json(self) -> dict:
        terms = [
            {"exp": list(exp), "coef": fmt_rational(coef)}
            for exp, coef in sorted(self.terms.items())
        ]
        return {"vars": self.nvars, "terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "MultiPoly":
        terms = {
            tuple(t["exp"]): parse_rational(t["coef"]) for t in data["terms"]
        }
        return cls(data["vars"], terms)

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for exp, coef in sorted(self.terms.items()):
            mono = "*".join(
                f"k{i + 1}^{e}" if e > 1 else f"k{i + 1}"
                for i, e in enumerate(exp)
                if e
            )
            bits.append(f"{fmt_rational(coef)}{'*' + mono if mono else ''}")
        return "MultiPoly(" + " + ".join(bits) + ")"


def as_poly(value, nvars: int) -> MultiPoly:
    """Coerce a scalar result into a constant MultiPoly (identity on MultiPoly)."""
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.const(nvars, value)
