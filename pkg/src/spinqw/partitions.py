"""Partitions and the combinatorial predicates used by boundary conditions.

A partition is stored dense, as a tuple of weakly decreasing positive parts
with trailing zeros implicit; the empty tuple is the empty partition.  Row
partition functions index parts by columns j = 1..lambda_1, so ``part`` takes
1-based indices and returns 0 beyond the stored length.
"""

from __future__ import annotations

from itertools import count


def as_partition(parts) -> tuple:
    """Validate and normalize an iterable of parts (drops trailing zeros)."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return parts


def parse_partition(text: str) -> tuple:
    """Comma-separated parts; empty string is the empty partition."""
    if text == "":
        return ()
    return as_partition(int(p) for p in text.split(","))


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam)


def part(lam, i: int) -> int:
    """lambda_i with 1-based index and implicit trailing zeros."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def size(lam) -> int:
    return sum(lam)


def conjugate(lam) -> tuple:
    """lambda'_i = #{j : lambda_j >= i}."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def col_mult(lam, j: int) -> int:
    """m_j(lambda') = lambda_j - lambda_{j+1}, the multiplicity of j in lambda'."""
    if j < 1:
        raise ValueError("column index must be >= 1")
    return part(lam, j) - part(lam, j + 1)


def contains(lam, mu) -> bool:
    """mu subset of lam, part by part."""
    return all(part(lam, i) >= part(mu, i) for i in range(1, len(mu) + 1))


def interlaces(lam, mu) -> bool:
    """lam > mu (interlacing): lam_i >= mu_i >= lam_{i+1} for all i."""
    n = max(len(lam), len(mu)) + 1
    return all(
        part(lam, i) >= part(mu, i) >= part(lam, i + 1) for i in range(1, n)
    )


def enum_box(rows: int, cols: int) -> list:
    """All partitions with length <= rows and lam_1 <= cols, graded lex order."""
    if rows < 0 or cols < 0:
        raise ValueError("box dimensions must be nonnegative")
    out = [()]
    stack = [()]
    while stack:
        prefix = stack.pop()
        if len(prefix) == rows:
            continue
        top = prefix[-1] if prefix else cols
        for p in range(1, top + 1):
            lam = prefix + (p,)
            out.append(lam)
            stack.append(lam)
    out.sort(key=lambda p: (sum(p), p))
    return out


def enum_interlacing_below(lam) -> list:
    """All mu with lam > mu."""
    out = []

    def rec(i, prefix):
        if i > len(lam):
            out.append(as_partition(prefix))
            return
        lo = part(lam, i + 1)
        hi = part(lam, i)
        for m in range(lo, hi + 1):
            rec(i + 1, prefix + (m,))

    rec(1, ())
    return out


def enum_interlacing_above(mu, cap: int) -> list:
    """All lam > mu with lam_1 <= cap.

    Parts are chosen with explicit zeros up to length l(mu)+1, so every
    partition is produced exactly once.
    """
    out = []
    depth = len(mu) + 1

    def rec(i, prefix):
        if i > depth:
            out.append(as_partition(prefix))
            return
        lo = part(mu, i)
        hi = cap if i == 1 else min(part(mu, i - 1), prefix[-1])
        for p in range(lo, hi + 1):
            rec(i + 1, prefix + (p,))

    rec(1, ())
    return out


def enum_vstrip_above(mu, rows: int) -> list:
    """All lam containing mu with lam_c - mu_c in {0,1} and at most `rows`
    parts.  The bound is mandatory: a vertical strip may extend a partition
    by arbitrarily many rows, so callers must supply their support bound."""
    out = []
    depth = max(rows, len(mu))

    def rec(c, prefix):
        if c > depth:
            out.append(as_partition(prefix))
            return
        prev = prefix[-1] if prefix else None
        for d in (0, 1):
            p = part(mu, c) + d
            if prev is not None and p > prev:
                continue
            rec(c + 1, prefix + (p,))

    rec(1, ())
    return out


def enum_vstrip_below(lam) -> list:
    """All mu contained in lam with lam_c - mu_c in {0,1} for every column c."""
    out = []
    depth = len(lam)

    def rec(c, prefix):
        if c > depth:
            out.append(as_partition(prefix))
            return
        prev = prefix[-1] if prefix else None
        for d in (0, 1):
            p = part(lam, c) - d
            if p < 0 or (prev is not None and p > prev):
                continue
            rec(c + 1, prefix + (p,))

    rec(1, ())
    return out


def add_first_part(lam, n: int) -> tuple:
    """Prepend a part n >= lam_1 (the hat extension of a partition)."""
    if lam and n < lam[0]:
        raise ValueError(f"prepended part {n} smaller than lambda_1 = {lam[0]}")
    return (n,) + tuple(lam)
