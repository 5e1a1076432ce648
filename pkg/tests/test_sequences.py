from fractions import Fraction

import pytest

from magicount.errors import ConsistencyError
from magicount.exactmath import binomial, factorial, odd_double_factorial
from magicount.sequences import (
    SequenceKind,
    check_double_factorial_identity,
    closed_u2,
    closed_v2,
    closed_w2,
    compute_u,
    compute_u_direct,
    compute_v,
    compute_w,
    compute_zero_one,
)

TABLE = {
    ("u", 2): [1, 1, 6, 72, 1440, 43200],
    ("w01", 2): [0, 1, 6, 90, 2040, 67950],
    ("w", 2): [1, 3, 21, 282, 6210, 202410],
    ("u", 3): [1, 8, 900, 359424, 370828800, 820150272000],
    ("w01", 3): [0, 8, 900, 366336, 378028800, 833156928000],
    ("w", 3): [1, 12, 1152, 431424, 427723200, 920031955200],
}


def test_v_small_values():
    assert compute_v(2, 3).values() == [1, 2, 8]
    assert compute_v(3, 2)[2] == 8
    assert compute_v(3, 3)[3] == 200


def test_v_size_two_closed_form():
    for d in range(2, 13):
        assert compute_v(d, 2)[2] == 3 ** (d - 1) - 1


@pytest.mark.parametrize("d", [2, 3])
def test_u_reproduces_reference_row(d):
    assert compute_u(d, 6).values() == TABLE[("u", d)]


def test_u_dimension_four_size_two():
    # 2^-2 * (2!)^3 * (3^3 - 1)
    assert compute_u(4, 2)[2] == 52


@pytest.mark.parametrize("d", [2, 3])
def test_w_reproduces_reference_row(d):
    table = compute_w(d, 6)
    assert table[0] == 1
    assert table.values()[1:] == TABLE[("w", d)]


def test_w_size_two_hand_unrolled():
    # w_2 = u_2 + (1/2) * C(2,1)^3 * u_1 * w_1 = 8 + 4
    assert compute_w(3, 2)[2] == 12


@pytest.mark.parametrize("d", [2, 3])
def test_zero_one_reproduces_reference_row(d):
    table = compute_zero_one(d, 6)
    assert table[0] == 1
    assert table.values()[1:] == TABLE[("w01", d)]


def test_zero_one_size_four_hand_unrolled():
    # 359424 + (1/2) * 6^3 * 8 * 8
    assert compute_zero_one(3, 4)[4] == 359424 + 6912


def test_u_direct_matches_reference_points():
    assert compute_u_direct(3, 2)[2] == 8
    assert compute_u_direct(2, 4)[4] == 72


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_u_routes_agree(d):
    assert compute_u_direct(d, 15).entries == compute_u(d, 15).entries


def test_closed_u2():
    assert closed_u2(1) == 1
    assert closed_u2(3) == 6
    assert closed_u2(6) == 43200


def test_closed_w2():
    assert closed_w2(1) == 1
    assert closed_w2(2) == 3
    assert closed_w2(6) == 202410


def test_closed_v2():
    assert closed_v2(1) == 1
    assert closed_v2(2) == 2
    assert closed_v2(4) == 48


def test_closed_forms_match_recurrences():
    v = compute_v(2, 40)
    u = compute_u(2, 40)
    w = compute_w(2, 40)
    for n in range(1, 41):
        assert closed_v2(n) == v[n]
        assert closed_u2(n) == u[n]
        assert closed_w2(n) == w[n]
    assert closed_w2(0) == w[0] == 1


def test_wrong_denominator_variant_fails_at_one():
    # The 2^(n-k) denominator variant of the closed total-count formula
    # gives 5/2 at n = 1 instead of the correct 1; it must stay rejected.
    wrong = sum(
        Fraction(binomial(2 * k, k), 2 ** (1 - k) * factorial(1 - k))
        for k in range(2)
    )
    assert wrong == Fraction(5, 2)
    assert closed_w2(1) == 1


def test_double_factorial_identity_hand_values():
    # n=2: 1*1!!*0!! + 1*(-1)!!*2!! = 1 + 2 = 3!!
    # n=3: 3 + 4 + 8 = 5!!
    assert check_double_factorial_identity(2)
    assert check_double_factorial_identity(3)
    assert check_double_factorial_identity(50)


def test_double_factorial_identity_rejects_small_n():
    with pytest.raises(ValueError):
        check_double_factorial_identity(1)


def test_bridge_between_u_and_v():
    for d in (2, 3, 4):
        u = compute_u(d, 25)
        v = compute_v(d, 25)
        for n in range(2, 26):
            assert 2**n * u[n] == factorial(n) ** (d - 1) * v[n]


def test_v_bounded_by_involution_count_power():
    for d in (2, 3, 4, 5):
        v = compute_v(d, 30)
        for n in range(1, 31):
            assert 0 <= v[n] <= odd_double_factorial(n) ** (d - 1)


def test_w_dominates_u_and_zero_one():
    for d in (2, 3, 4):
        u = compute_u(d, 20)
        w = compute_w(d, 20)
        w01 = compute_zero_one(d, 20)
        for n in range(1, 21):
            assert w[n] >= u[n] >= 0
            assert w[n] >= w01[n]


def test_argument_validation():
    with pytest.raises(ValueError):
        compute_v(1, 5)
    with pytest.raises(ValueError):
        compute_v(2, 0)
    with pytest.raises(ValueError):
        compute_w(2, -1)
    with pytest.raises(ValueError):
        closed_u2(0)
    with pytest.raises(ValueError):
        closed_w2(-1)
    with pytest.raises(ValueError):
        closed_v2(0)


def test_empty_matrix_convention():
    assert compute_w(3, 0).values() == [1]
    assert compute_zero_one(3, 0).values() == [1]


def test_table_metadata():
    table = compute_v(3, 4)
    assert table.kind is SequenceKind.V
    assert table.dimension == 3
    assert table.first_index == 1
    assert table.max_index == 4
    assert table.indices() == [1, 2, 3, 4]
    assert 3 in table and 0 not in table
