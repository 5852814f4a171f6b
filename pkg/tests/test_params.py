import json
import random

import pytest

from spinqw.params import (
    ParameterBase,
    ParamView,
    base_from_json,
    base_to_json,
    fixture_p0,
    hat_base,
    load_params,
    make_xi_equals_s,
    make_xi_equals_sbar,
    mixed_shift_pair,
    random_base,
    view,
)
from spinqw.scalars import HorizonError, Rat


def test_unshifted_accessors_square_the_generators():
    v = view(fixture_p0())
    for i in range(5):
        assert v.s(i) == Rat(1, (i + 2) ** 2)
        assert v.xi(i) == Rat(1, (i + 3) ** 2)


def test_product_depends_on_total_shift_and_ratio_on_offset():
    base = random_base(random.Random(11), horizon=12)
    v0 = view(base)
    for o in range(3):
        for k in range(4):
            w = v0.plain(o).mixed(k)
            for i in range(4):
                assert w.s(i) * w.xi(i) == v0.s(i + o + k) * v0.xi(i + o + k)
                assert w.s(i) / w.xi(i) == v0.s(i + o) / v0.xi(i + o)


def test_mixed_shift_squared_accessor_matches_direct_formula():
    rng = random.Random(23)
    for _ in range(10):
        base = random_base(rng, horizon=10)
        v = view(base)
        for k in range(3):
            w = v.mixed(k)
            for i in range(4):
                # sqrt is branch-dependent; the square is not
                assert w.s(i) ** 2 == v.s(i + k) * v.xi(i + k) * v.s(i) / v.xi(i)
                assert w.xi(i) ** 2 == v.xi(i + k) * v.s(i + k) * v.xi(i) / v.s(i)


def test_mixed_shifts_compose_additively():
    base = fixture_p0()
    xi_v, s_v = mixed_shift_pair(view(base), view(base), 2)
    xi_w, s_w = mixed_shift_pair(xi_v, s_v, 3)
    direct = view(base).mixed(5)
    for i in range(6):
        assert s_w.s(i) == direct.s(i)
        assert xi_w.xi(i) == direct.xi(i)


def test_mixed_shift_zero_is_identity():
    v = view(fixture_p0())
    w = v.mixed(0)
    assert all(w.s(i) == v.s(i) and w.xi(i) == v.xi(i) for i in range(6))


def test_plain_shift_composes_and_relabels():
    v = view(fixture_p0())
    assert v.plain(0).s(3) == v.s(3)
    assert v.plain(2).plain(1).s(1) == v.plain(3).s(1) == v.s(4)


def test_xi_equals_s_turns_mixed_shift_into_plain_shift():
    base = make_xi_equals_s(random_base(random.Random(5), horizon=10))
    v = view(base)
    for k in range(3):
        for i in range(4):
            assert v.mixed(k).s(i) == v.s(i + k)
            assert v.mixed(k).xi(i) == v.xi(i + k)


def test_xi_equals_sbar_is_fixed_by_mixed_shift():
    base = make_xi_equals_sbar(random_base(random.Random(6), horizon=10))
    v = view(base)
    for k in range(4):
        for i in range(4):
            assert v.mixed(k).s(i) == v.s(i)
            assert v.mixed(k).xi(i) == v.xi(i)
            assert v.xi(i) == 1 / v.s(i)


def test_horizon_access_is_a_hard_error():
    v = view(fixture_p0(horizon=4))
    v.s(4)
    with pytest.raises(HorizonError):
        v.s(5)
    with pytest.raises(HorizonError):
        v.mixed(2).s(3)


def test_hat_base_shifts_everything_by_one():
    base = fixture_p0()
    hat = hat_base(base)
    v, hv = view(base), view(hat)
    assert hv.s(0) == 1 and hv.xi(0) == 1
    for i in range(5):
        assert hv.s(i + 1) == v.s(i)
        assert hv.xi(i + 1) == v.xi(i)


def test_json_round_trip(tmp_path):
    base = fixture_p0(horizon=6)
    blob = base_to_json(base)
    assert base_from_json(blob) == base
    path = tmp_path / "params.json"
    path.write_text(json.dumps(blob), encoding="utf-8")
    assert load_params(str(path)) == base


def test_base_validation():
    with pytest.raises(ValueError):
        ParameterBase(Rat(1, 3), (Rat(1), Rat(0)), (Rat(1), Rat(1)), 1)
    with pytest.raises(ValueError):
        ParameterBase(Rat(1, 3), (Rat(1),), (Rat(1),), 4)


def test_pair_views_must_share_base():
    with pytest.raises(ValueError):
        mixed_shift_pair(view(fixture_p0()), view(fixture_p0()), 1)
    v = view(fixture_p0())
    assert isinstance(v, ParamView)
