import pytest

from spinqw.scalars import Rat
from spinqw.yang_baxter import INSTANCES, STANDARD_SEVEN, check_instance


def test_registry_has_the_expected_instances():
    assert set(STANDARD_SEVEN) <= set(INSTANCES)
    assert "cont-cauchy" in INSTANCES and "cont-w" in INSTANCES


def test_all_zero_boundary_is_trivially_equal():
    inst = INSTANCES["hs"]
    params = {"q": Rat(1, 3), "x": Rat(2, 5), "y": Rat(3, 7), "s": Rat(1, 4)}
    lhs, rhs = inst.sides(params)
    assert lhs(0, 0, 0, 0, 0, 0) == rhs(0, 0, 0, 0, 0, 0) != 0


def test_hs_two_term_boundary_by_hand():
    # boundary (a1,a2,a3,b1,b2,b3) = (1,0,0,1,0,0): on the left side only
    # l2 = 0 contributes (l2 = 1 forces l1 = 0, then l3 = -1)
    q, x, y, s = Rat(1, 3), Rat(2, 5), Rat(3, 7), Rat(1, 4)
    from spinqw.weights import R_mat, w_s

    want = w_s(q, x, s, 1, 0, 1, 0) * w_s(q, y, s, 1, 0, 1, 0) * R_mat(
        q, x / y, 0, 0, 0, 0
    )
    inst = INSTANCES["hs"]
    lhs, rhs = inst.sides({"q": q, "x": x, "y": y, "s": s})
    assert lhs(1, 0, 0, 1, 0, 0) == want == rhs(1, 0, 0, 1, 0, 0)


@pytest.mark.parametrize("name", list(STANDARD_SEVEN))
def test_each_instance_passes_quick_exact_check(name):
    cap = 2 if name == "col-def" else 3
    report = check_instance(name, cap=cap, trials=3, seed=11)
    assert report.passed, report.failures[:2]
    assert report.instances > 0


@pytest.mark.parametrize("name", ["cont-cauchy", "cont-w"])
def test_continued_equations_pass(name):
    report = check_instance(name, cap=3, trials=3, seed=13)
    assert report.passed, report.failures[:2]


def test_deformation_with_eta_one_degenerates():
    params = {
        "q": Rat(1, 3),
        "x": Rat(2, 5),
        "s": Rat(1, 4),
        "t": Rat(5, 9),
        "eta": Rat(1),
    }
    params["y"] = params["x"] * params["s"] / params["t"]
    plain = INSTANCES["cauchy"].sides(dict(params))
    deformed = INSTANCES["def-cauchy"].sides(params)
    for bnd in INSTANCES["cauchy"].boundaries(3):
        assert plain[0](*bnd) == deformed[0](*bnd)
        assert plain[1](*bnd) == deformed[1](*bnd)


def test_constraint_is_enforced_by_sampler():
    import random

    inst = INSTANCES["cauchy"]
    p = inst.sampler(random.Random(5))
    assert p["x"] * p["s"] == p["y"] * p["t"]
    inst = INSTANCES["col-def"]
    p = inst.sampler(random.Random(5))
    assert p["x"] / p["s"] == p["y"] / p["t"]


def test_negative_control_fails():
    report = check_instance("hs", cap=2, trials=2, seed=3, perturb=True)
    assert not report.passed and report.failures


def test_reports_are_deterministic():
    a = check_instance("hs", cap=2, trials=2, seed=42).to_json()
    b = check_instance("hs", cap=2, trials=2, seed=42).to_json()
    assert a == b
