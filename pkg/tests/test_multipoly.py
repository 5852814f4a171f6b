import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinqw.multipoly import MultiPoly, as_poly
from spinqw.scalars import Rat


def small_poly(nvars=2):
    coef = st.fractions(min_value=-4, max_value=4, max_denominator=6).map(
        lambda f: Rat(f.numerator, f.denominator)
    )
    exp = st.tuples(*([st.integers(0, 3)] * nvars))
    return st.dictionaries(exp, coef, max_size=4).map(
        lambda terms: MultiPoly(nvars, terms)
    )


def test_constant_polynomial_evaluates_to_itself():
    one = MultiPoly.const(3, 1)
    assert one.evaluate((Rat(9), Rat(-2), Rat(1, 7))) == 1


def test_monomial_product_evaluation():
    k1 = MultiPoly.variable(2, 0)
    k2 = MultiPoly.variable(2, 1)
    assert (k1 * k2).evaluate((2, 3)) == 6


def test_evaluate_rejects_wrong_length():
    with pytest.raises(ValueError):
        MultiPoly.const(2, 1).evaluate((1,))


def test_no_zero_terms_are_stored():
    p = MultiPoly(1, {(0,): Rat(1)}) - 1
    assert p.is_zero() and p.terms == {}


@given(p=small_poly(), r=small_poly(), s=small_poly())
@settings(max_examples=100, deadline=None)
def test_ring_axioms_on_random_instances(p, r, s):
    assert p + r == r + p
    assert p * r == r * p
    assert (p + r) + s == p + (r + s)
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s


@given(p=small_poly(), r=small_poly())
@settings(max_examples=100, deadline=None)
def test_evaluation_is_a_ring_homomorphism(p, r):
    point = (Rat(2, 3), Rat(-1, 2))
    assert (p + r).evaluate(point) == p.evaluate(point) + r.evaluate(point)
    assert (p * r).evaluate(point) == p.evaluate(point) * r.evaluate(point)


def test_permuted_swaps_variables():
    k1 = MultiPoly.variable(2, 0)
    p = k1**2
    swapped = p.permuted((1, 0))
    assert swapped == MultiPoly.variable(2, 1) ** 2


def test_json_round_trip_is_deterministic():
    p = (MultiPoly.variable(2, 0) + 2) * MultiPoly.variable(2, 1) - Rat(1, 3)
    blob = p.to_json()
    assert MultiPoly.from_json(blob) == p
    assert blob == p.to_json()


def test_scalar_division():
    p = MultiPoly.variable(1, 0) * 6
    assert p / 3 == MultiPoly.variable(1, 0) * 2
    with pytest.raises(TypeError):
        p / MultiPoly.variable(1, 0)


def test_as_poly_coerces_scalars():
    assert as_poly(Rat(1, 2), 2) == MultiPoly.const(2, Rat(1, 2))
    p = MultiPoly.variable(1, 0)
    assert as_poly(p, 1) is p
