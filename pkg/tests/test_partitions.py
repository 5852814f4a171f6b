import pytest

from spinqw.partitions import (
    add_first_part,
    as_partition,
    col_mult,
    conjugate,
    contains,
    enum_box,
    enum_interlacing_above,
    enum_interlacing_below,
    enum_vstrip_above,
    format_partition,
    interlaces,
    parse_partition,
    part,
    size,
)


def partitions_of_size_at_most(n):
    """Independent enumeration by recursive part choice, used as the oracle."""
    out = [()]

    def rec(prefix, remaining, maxpart):
        for p in range(1, min(remaining, maxpart) + 1):
            lam = prefix + (p,)
            out.append(lam)
            rec(lam, remaining - p, p)

    rec((), n, n)
    return out


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)


def test_conjugate_is_involutive_exhaustively():
    for lam in partitions_of_size_at_most(12):
        assert conjugate(conjugate(lam)) == lam


def test_col_mult_examples():
    assert col_mult((3, 1), 1) == 2
    assert all(col_mult((), j) == 0 for j in range(1, 6))


def test_col_mult_weighted_sum_is_size():
    for lam in partitions_of_size_at_most(12):
        assert sum(
            j * col_mult(lam, j) for j in range(1, len(lam) + 1)
        ) == size(lam)


def test_col_mult_matches_conjugate_multiplicity():
    for lam in partitions_of_size_at_most(10):
        lamc = conjugate(lam)
        for k in range(1, 6):
            assert col_mult(lam, k) == sum(1 for p in lamc if p == k)


def test_interlacing_examples():
    assert interlaces((2, 1), (1,))
    assert not interlaces((1,), (2,))


def test_interlacing_bounds_length_difference():
    univ = partitions_of_size_at_most(10)
    for lam in univ:
        for mu in univ:
            if interlaces(lam, mu):
                assert 0 <= len(lam) - len(mu) <= 1


def test_interlacing_equals_containment_with_column_bound():
    univ = partitions_of_size_at_most(10)
    for lam in univ:
        lamc = conjugate(lam)
        for mu in univ:
            muc = conjugate(mu)
            alt = contains(lam, mu) and all(
                part(lamc, r) <= part(muc, r) + 1
                for r in range(1, part(lam, 1) + 1)
            )
            assert interlaces(lam, mu) == alt


def test_enum_box_examples():
    assert enum_box(0, 0) == [()]
    assert enum_box(1, 2) == [(), (1,), (2,)]
    assert len(enum_box(3, 3)) == 20  # Gaussian binomial C(6,3) at q=1


def test_enum_box_members_fit_and_are_unique():
    box = enum_box(3, 4)
    assert len(set(box)) == len(box)
    for lam in box:
        assert len(lam) <= 3 and part(lam, 1) <= 4


def test_enum_interlacing_above_examples():
    assert enum_interlacing_above((), 0) == [()]
    assert sorted(enum_interlacing_above((1,), 1)) == [(1,), (1, 1)]


def test_enum_interlacing_above_agrees_with_filter():
    for mu in [(), (1,), (2, 1), (3, 3, 1)]:
        cap = part(mu, 1) + 2
        got = sorted(enum_interlacing_above(mu, cap))
        want = sorted(
            lam
            for lam in enum_box(len(mu) + 1, cap)
            if interlaces(lam, mu)
        )
        assert got == want
        for lam in got:
            assert interlaces(lam, mu)


def test_enum_interlacing_below_agrees_with_filter():
    for lam in [(), (2,), (3, 1), (4, 2, 2)]:
        got = sorted(enum_interlacing_below(lam))
        want = sorted(
            mu
            for mu in enum_box(len(lam), part(lam, 1))
            if interlaces(lam, mu)
        )
        assert got == want


def test_enum_vstrip_above_agrees_with_filter():
    for mu in [(), (1,), (2, 2), (3, 1)]:
        for rows in (len(mu) + 1, len(mu) + 3):
            got = sorted(enum_vstrip_above(mu, rows))
            want = sorted(
                lam
                for lam in enum_box(rows, part(mu, 1) + 1)
                if contains(lam, mu)
                and all(
                    part(lam, c) - part(mu, c) in (0, 1)
                    for c in range(1, rows + 1)
                )
            )
            assert got == want


def test_enum_vstrip_below_agrees_with_filter():
    from spinqw.partitions import enum_vstrip_below

    for lam in [(), (2,), (2, 2), (3, 1, 1)]:
        got = sorted(enum_vstrip_below(lam))
        want = sorted(
            mu
            for mu in enum_box(len(lam), part(lam, 1))
            if contains(lam, mu)
            and all(
                part(lam, c) - part(mu, c) in (0, 1)
                for c in range(1, len(lam) + 1)
            )
        )
        assert got == want


def test_text_round_trip():
    assert parse_partition("") == ()
    assert parse_partition("3,1") == (3, 1)
    assert format_partition((3, 1)) == "3,1"
    with pytest.raises(ValueError):
        parse_partition("1,3")


def test_as_partition_normalizes_trailing_zeros():
    assert as_partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        as_partition([2, -1])


def test_add_first_part():
    assert add_first_part((), 3) == (3,)
    assert add_first_part((2, 1), 2) == (2, 2, 1)
    with pytest.raises(ValueError):
        add_first_part((3,), 2)
