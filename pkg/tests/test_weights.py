import random

import pytest

from spinqw.params import fixture_p0, view
from spinqw.scalars import PoleError, Rat, qpoch, qpoch_inf, rand_rat
from spinqw.weights import (
    R_mat,
    R_star,
    W_col,
    W_fused,
    W_hat,
    W_s,
    W_s_star,
    W_tilde,
    phi,
    w_col,
    w_s,
    w_s_star,
    w_tilde_star,
)

Q = Rat(1, 3)
U = Rat(2, 7)
S = Rat(3, 5)


def p0_point():
    v = view(fixture_p0())
    return v.q, v.s(1), v.xi(1)


def compositions(n, total_max):
    if n == 0:
        return [()]
    out = []
    for first in range(total_max + 1):
        for rest in compositions(n - 1, total_max - first):
            out.append((first,) + rest)
    return out


# ---------------------------------------------------------------- w_s family


def test_w_s_table_g00g0():
    for g in range(6):
        assert w_s(Q, U, S, g, 0, g, 0) == (1 - S * U * Q**g) / (1 - S * U)


def test_w_s_vanishes_off_conservation():
    for i in range(6):
        for j in (0, 1):
            for k in range(6):
                for l in (0, 1):
                    if i + j != k + l:
                        assert w_s(Q, U, S, i, j, k, l) == 0


def test_w_s_is_stochastic():
    rng = random.Random(7)
    points = [(U, S)] + [(rand_rat(rng), rand_rat(rng)) for _ in range(20)]
    for u, s in points:
        if 1 - s * u == 0:
            continue
        for i in range(7):
            for j in (0, 1):
                total = sum(
                    w_s(Q, u, s, i, j, k, l)
                    for l in (0, 1)
                    for k in [i + j - l]
                    if k >= 0
                )
                assert total == 1


def test_w_s_pole_is_loud():
    with pytest.raises(PoleError):
        w_s(Q, Rat(5, 3), Rat(3, 5), 1, 0, 1, 0)


# ----------------------------------------------------------- dual w_s family


def test_w_s_star_table_g00g0():
    for g in range(6):
        assert w_s_star(Q, U, S, g, 0, g, 0) == (1 - S * U * Q**g) / (1 - S * U)


def test_w_s_star_is_rescaled_w_s():
    # defining relation: w*_{u;s}(i,l;k,j) = s^{-2l} [(q;q)_i/(s^2;q)_i]
    #                    [(s^2;q)_k/(q;q)_k] w_{u;s}(k,j;i,l)
    for i in range(6):
        for l in (0, 1):
            for j in (0, 1):
                k = i + l - j
                if k < 0:
                    continue
                scale = (
                    S ** (-2 * l)
                    * qpoch(Q, Q, i)
                    / qpoch(S * S, Q, i)
                    * qpoch(S * S, Q, k)
                    / qpoch(Q, Q, k)
                )
                assert w_s_star(Q, U, S, i, l, k, j) == scale * w_s(
                    Q, U, S, k, j, i, l
                )


def test_w_s_star_direction_change():
    # w*_{u;s}(i,l;k,j) = (s-u)/(s(1-us)) * w_{1/u;s}(i,1-j;k,1-l)
    factor = (S - U) / (S * (1 - U * S))
    for i in range(6):
        for l in (0, 1):
            for j in (0, 1):
                k = i + l - j
                if k < 0:
                    continue
                assert w_s_star(Q, U, S, i, l, k, j) == factor * w_s(
                    Q, 1 / U, S, i, 1 - j, k, 1 - l
                )


# ------------------------------------------------------------------ R-matrix


def test_R_listed_values():
    z = Rat(4, 9)
    assert R_mat(Q, z, 0, 0, 0, 0) == 1 - Q * z
    assert R_mat(Q, z, 1, 1, 1, 1) == 1 - Q * z
    assert R_mat(Q, z, 0, 1, 0, 1) == 1 - z
    assert R_mat(Q, z, 0, 1, 1, 0) == z * (1 - Q)
    assert R_mat(Q, z, 1, 0, 0, 1) == 1 - Q
    assert R_mat(Q, z, 1, 0, 1, 0) == Q * (1 - z)


def test_R_unlisted_tuples_vanish():
    z = Rat(4, 9)
    assert R_mat(Q, z, 0, 0, 1, 1) == 0
    assert R_mat(Q, z, 1, 1, 0, 0) == 0


def test_R_star_inverts_the_parameter():
    z = Rat(4, 9)
    assert R_star(Q, z, 0, 1, 0, 1) == R_mat(Q, 1 / z, 0, 1, 0, 1)


# ------------------------------------------------------------------ W family


T2 = Rat(2, 11)
S2 = Rat(3, 7)


def test_W_s_vanishes_when_i_below_l():
    assert W_s(Q, T2, S2, 1, 3, 2, 2) == 0
    assert W_s(Q, T2, S2, 0, 1, 0, 1) == 0


def test_W_s_trivial_vertex():
    assert W_s(Q, T2, S2, 0, 0, 0, 0) == 1


def test_W_s_is_stochastic():
    rng = random.Random(8)
    points = [(T2, S2)] + [(rand_rat(rng), rand_rat(rng)) for _ in range(20)]
    for t2, s2 in points:
        for i in range(6):
            if qpoch(s2, Q, i) == 0:
                continue
            for j in range(6):
                total = sum(
                    W_s(Q, t2, s2, i, j, i + j - l, l) for l in range(i + 1)
                )
                assert total == 1


def test_W_s_star_vanishes_when_i_below_j():
    assert W_s_star(Q, T2, S2, 1, 2, 1, 2) == 0


def test_W_s_star_zero_labels():
    assert W_s_star(Q, T2, S2, 0, 0, 0, 0) == 1


def test_W_s_star_is_rescaled_W_s():
    # W*_{t,s}(i,l;k,j) = s^{-2l} [(q;q)_i/(s^2;q)_i][(s^2;q)_k/(q;q)_k]
    #                     t^{2k} [(t^2;q)_j/(q;q)_j][(q;q)_l/(t^2;q)_l] W_{t,s}(k,j;i,l)
    for i in range(6):
        for l in range(4):
            for j in range(4):
                k = i + l - j
                if k < 0:
                    continue
                scale = (
                    S2 ** (-l)
                    * qpoch(Q, Q, i)
                    / qpoch(S2, Q, i)
                    * qpoch(S2, Q, k)
                    / qpoch(Q, Q, k)
                    * T2**k
                    * qpoch(T2, Q, j)
                    / qpoch(Q, Q, j)
                    * qpoch(Q, Q, l)
                    / qpoch(T2, Q, l)
                )
                assert W_s_star(Q, T2, S2, i, l, k, j) == scale * W_s(
                    Q, T2, S2, k, j, i, l
                )


# -------------------------------------------------------------- fused family


def test_W_fused_at_J_1_is_w_s():
    for i in range(5):
        for j in (0, 1):
            for l in (0, 1):
                k = i + j - l
                if k < 0:
                    continue
                assert W_fused(Q, 1, U, S, i, j, k, l) == w_s(Q, U, S, i, j, k, l)


def test_W_fused_specializes_to_W_s():
    # u = s and q^J -> t^{-2}: evaluate at t^2 = q^{-J}
    for J in (2, 3, 4):
        t2 = Q ** (-J)
        for i in range(5):
            for j in range(min(J, 3) + 1):
                for l in range(min(J, 3) + 1):
                    k = i + j - l
                    if k < 0:
                        continue
                    assert W_fused(Q, J, S, S, i, j, k, l) == W_s(
                        Q, t2, S * S, i, j, k, l
                    )


def test_W_fused_is_stochastic():
    for J in (1, 2, 3):
        for i in range(5):
            for j in range(J + 1):
                total = sum(
                    W_fused(Q, J, U, S, i, j, i + j - l, l)
                    for l in range(min(J, i + j) + 1)
                    if i + j - l >= 0
                )
                assert total == 1


def test_phi_rejects_bad_range():
    assert phi(Q, 3, 2, U, S) == 0


# ---------------------------------------------------------- continued family


def test_w_tilde_star_free_label_cells():
    alpha = Rat(5, 8)
    beta, wt = w_tilde_star(Q, U, S, alpha, 0, 0)
    assert beta == alpha and wt == (1 - S * U * alpha) / (1 - S * U)
    beta, wt = w_tilde_star(Q, U, S, alpha, 1, 0)
    assert beta == Q * alpha
    beta, wt = w_tilde_star(Q, U, S, alpha, 0, 1)
    assert beta == alpha / Q


def test_w_tilde_star_at_integer_powers_is_w_s_star():
    for i in range(5):
        for l in (0, 1):
            for j in (0, 1):
                k = i + l - j
                if k < 0:
                    continue
                beta, wt = w_tilde_star(Q, U, S, Q**i, l, j)
                assert beta == Q**k
                assert wt == w_s_star(Q, U, S, i, l, k, j)


def test_w_tilde_star_deformed_specialization():
    eta = Rat(5, 4)
    for i in range(4):
        for l in (0, 1):
            for j in (0, 1):
                k = i + l - j
                if k < 0:
                    continue
                alpha = eta ** (2 * (1 - j)) * Q**i
                beta, wt = w_tilde_star(Q, U, S, alpha, l, j)
                assert beta == eta ** (2 * (1 - j)) * Q**k
                lhs = wt * (1 - S * U) / (1 - eta * eta * S * U)
                assert lhs == w_s_star(Q, eta * U, eta * S, i, l, k, j)


def test_W_tilde_matches_W_s_and_vanishes_off_support():
    assert W_tilde(Q, T2, S2, 0, 0, 0) == 1
    assert W_tilde(Q, T2, S2, 2, 1, 0) == 0
    assert W_tilde(Q, T2, S2, 2, -1, 3) == 0
    for i in range(5):
        for l in range(i + 1):
            for j in range(3):
                assert W_tilde(Q, T2, S2, i, i - l, l) == W_s(
                    Q, T2, S2, i, j, i + j - l, l
                )


def test_W_hat_trivial_and_off_support():
    assert W_hat(Q, T2, S2, 0, 0, 2, 2) == 1
    assert W_hat(Q, T2, S2, 2, 1, 2, 2) == 0
    assert W_hat(Q, T2, S2, 2, -1, 3, 2) == 0


def test_W_hat_matches_infinite_pochhammer_ratio():
    # oracle: the display with true infinite products, evaluated numerically
    q, t2, s2 = 1 / 3, 2 / 11, 3 / 7
    N, delta = 2, 1
    j, k = 2, 3
    alpha = q**N
    want = (
        (s2 / t2) ** N
        * qpoch(q * alpha, q, delta)
        * qpoch(s2 / t2, q, delta)
        / qpoch(q, q, delta)
        * qpoch_inf(t2, q) / qpoch_inf(alpha * t2, q)
        * qpoch_inf(q**delta * alpha * s2, q) / qpoch_inf(s2, q)
    )
    got = float(W_hat(Rat(1, 3), Rat(2, 11), Rat(3, 7), N, delta, j, k))
    assert abs(got - want) < 1e-12


# --------------------------------------------------------------- colored


def test_w_col_reduces_to_w_s_for_one_color():
    for g in range(5):
        for a in (0, 1):
            for b in (0, 1):
                k = g + a - b
                if k < 0:
                    continue
                assert w_col(Q, 1, U, S, (g,), a, (k,), b) == w_s(
                    Q, U, S, g, a, k, b
                )


def test_w_col_empty_color_cell():
    I = (2, 1)
    got = w_col(Q, 2, U, S, I, 0, I, 0)
    assert got == (1 - S * U * Q**3) / (1 - S * U)


def test_w_col_is_stochastic_for_two_colors():
    for I in compositions(2, 4):
        for a in (0, 1, 2):
            total = 0
            for b in (0, 1, 2):
                K = list(I)
                if a > 0:
                    K[a - 1] += 1
                if b > 0:
                    K[b - 1] -= 1
                if min(K) < 0:
                    continue
                total += w_col(Q, 2, U, S, I, a, tuple(K), b)
            assert total == 1


def test_W_col_reduces_to_W_s_for_one_color():
    for i in range(5):
        for j in range(4):
            for l in range(4):
                k = i + j - l
                if k < 0:
                    continue
                assert W_col(Q, T2, S2, (i,), (j,), (k,), (l,)) == W_s(
                    Q, T2, S2, i, j, k, l
                )


def test_W_col_conservation():
    assert W_col(Q, T2, S2, (1, 0), (0, 1), (1, 1), (1, 0)) == 0
