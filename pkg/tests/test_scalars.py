import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinqw.scalars import (
    Rat,
    fmt_rational,
    parse_rational,
    qpoch,
    qpoch_inf,
    qpoch_inf_index,
)

small_rats = st.fractions(
    min_value=-3, max_value=3, max_denominator=12
).map(lambda f: Rat(f.numerator, f.denominator))


def test_qpoch_empty_product_convention():
    assert qpoch(Rat(7, 5), Rat(1, 3), 0) == 1


def test_qpoch_zero_argument():
    assert qpoch(0, Rat(1, 3), 5) == 1


def test_qpoch_two_factor_value():
    # (1/2; 1/3)_2 = (1 - 1/2)(1 - 1/6) = 5/12
    assert qpoch(Rat(1, 2), Rat(1, 3), 2) == Rat(5, 12)


def test_qpoch_rejects_negative_order():
    with pytest.raises(ValueError):
        qpoch(Rat(1, 2), Rat(1, 3), -1)


@given(x=small_rats, q=small_rats, n=st.integers(0, 8), m=st.integers(0, 8))
@settings(max_examples=200, deadline=None)
def test_qpoch_splits_multiplicatively(x, q, n, m):
    assert qpoch(x, q, n + m) == qpoch(x, q, n) * qpoch(x * q**n, q, m)


def test_qpoch_inf_at_zero():
    assert qpoch_inf(0.0, 1.0 / 3.0, 1e-12) == 1


def test_qpoch_inf_matches_long_finite_product():
    q = 1.0 / 3.0
    assert abs(qpoch_inf(q, q, 1e-13) - qpoch(q, q, 60)) < 1e-12


def test_qpoch_inf_functional_equation():
    # (x;q)_inf = (1 - x) (xq;q)_inf
    x, q = 0.41, 0.27
    lhs = qpoch_inf(x, q, 1e-14)
    rhs = (1 - x) * qpoch_inf(x * q, q, 1e-14)
    assert abs(lhs - rhs) < 1e-12


def test_qpoch_inf_rejects_large_q():
    with pytest.raises(ValueError):
        qpoch_inf(0.5, 1.2, 1e-10)


def test_truncation_index_is_deterministic_and_sufficient():
    x, q, tol = 0.9, 0.5, 1e-10
    k = qpoch_inf_index(x, q, tol)
    assert k == qpoch_inf_index(x, q, tol)
    assert abs(x) * abs(q) ** (k - 1) / (1 - abs(q)) < tol


@pytest.mark.parametrize(
    "text,num,den",
    [("1/3", 1, 3), ("-5/7", -5, 7), ("4", 4, 1), ("-12", -12, 1), ("+2/6", 1, 3)],
)
def test_parse_rational(text, num, den):
    got = parse_rational(text)
    assert got.numerator == num and got.denominator == den


@pytest.mark.parametrize("text", ["1 / 3", " 1/3", "a/b", "1/3/5", ""])
def test_parse_rational_rejects_garbage(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(text)


def test_fmt_rational_round_trips():
    for text in ["1/3", "-5/7", "4", "0"]:
        assert fmt_rational(parse_rational(text)) == text


def test_rational_equality_matches_cross_multiplication():
    assert Rat(2, 4) == Rat(1, 2)
    assert Rat(-3, 9) == Rat(1, -3)
    a, b = Rat(7, 12), Rat(35, 60)
    assert (a == b) == (a.numerator * b.denominator == b.numerator * a.denominator)
