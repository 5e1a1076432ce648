from fractions import Fraction

import mpmath
import pytest

from magicount.asymptotics import (
    RatioKind,
    RatioSeries,
    u_ratio,
    u_ratio_series,
    w2_ratio,
    w2_ratio_series,
    w_ratio,
    w_ratio_series,
    x_bound_check,
)
from magicount.sequences import compute_u, compute_w


def test_u_ratio_values(u_tables):
    assert u_ratio(3, 2, u_tables[3]) == Fraction(8, 9)
    assert u_ratio(3, 6, u_tables[3]) == Fraction(6750208, 7203735)
    # n = 1 sits outside the asymptotic regime: the ratio is 2 there.
    assert u_ratio(3, 1, u_tables[3]) == 2


def test_w_ratio_values(w_tables):
    assert w_ratio(3, 2, w_tables[3]) == Fraction(4, 3)
    assert w_ratio(3, 6, w_tables[3]) == Fraction(113584192, 108056025)


def test_ratio_argument_errors(u_tables, w_tables):
    with pytest.raises(ValueError):
        u_ratio(2, 3, u_tables[2])
    with pytest.raises(ValueError):
        u_ratio(3, 99, u_tables[3])
    with pytest.raises(ValueError):
        w_ratio(3, 2, u_tables[3])  # wrong table kind


def test_w_dominates_u_pointwise(u_tables, w_tables):
    for d in (3, 4, 5):
        for n in range(1, 41):
            assert w_ratio(d, n, w_tables[d]) >= u_ratio(d, n, u_tables[d])


def test_u_ratio_monotone_and_bounded(u_tables):
    for d in (3, 4, 5):
        series = u_ratio_series(d, u_tables[d], 40)
        values = series.values()
        assert all(v <= 1 for v in values)
        assert all(b >= a for a, b in zip(values, values[1:]))


def test_u_ratio_tie_at_dimension_three(u_tables):
    # Exact coincidence: both ratios are 8/9, so strict growth only starts
    # at n = 3.
    assert u_ratio(3, 2, u_tables[3]) == u_ratio(3, 3, u_tables[3]) == Fraction(8, 9)
    series = u_ratio_series(3, u_tables[3], 40)
    values = series.values()[1:]  # n >= 3
    assert all(b > a for a, b in zip(values, values[1:]))


def test_u_ratio_within_two_over_n(u_tables):
    for d in (3, 4, 5):
        for n in range(10, 41):
            assert abs(1 - u_ratio(d, n, u_tables[d])) <= Fraction(2, n)


def test_w_ratio_error_shrinks(w_tables, u_tables):
    for d in (3, 4, 5):
        wr = {n: w_ratio(d, n, w_tables[d]) for n in range(10, 41)}
        ur = {n: u_ratio(d, n, u_tables[d]) for n in range(10, 41)}
        for n in range(10, 40):
            assert abs(wr[n + 1] - 1) <= abs(wr[n] - 1)
            assert wr[n + 1] / ur[n + 1] <= wr[n] / ur[n]
        for n in range(10, 41):
            assert abs(wr[n] / ur[n] - 1) <= Fraction(2, n)


def test_w2_ratio_values(w2_long):
    assert abs(w2_ratio(6, w2_long, 30) - mpmath.mpf("1.02818270085413")) < 1e-12
    assert abs(w2_ratio(1, w2_long, 30) - mpmath.mpf("1.07504760349992")) < 1e-12


def test_w2_ratio_precision_scales(w2_long):
    coarse = w2_ratio(50, w2_long, 20)
    fine = w2_ratio(50, w2_long, 60)
    assert abs(coarse - fine) < mpmath.mpf(10) ** -18


def test_w2_ratio_argument_errors(w2_long, w_tables):
    with pytest.raises(ValueError):
        w2_ratio(6, w2_long, precision=19)
    with pytest.raises(ValueError):
        w2_ratio(0, w2_long)
    with pytest.raises(ValueError):
        w2_ratio(2, w_tables[3])  # dimension 3 table


def test_w2_ratio_stays_above_one(w2_long):
    series = w2_ratio_series(w2_long, 50, 30)
    assert all(value > 1 for value in series.values())


def test_w2_ratio_halving_signature(w2_long):
    cache = {n: w2_ratio(n, w2_long, 30) for n in range(10, 101)}
    for n in range(20, 101):
        assert abs(cache[n] - 1) < abs(cache[n // 2] - 1)


def test_x_bound_check(u_tables, w_tables):
    assert x_bound_check(3, 6, u_tables[3], w_tables[3])
    assert x_bound_check(4, 8, u_tables[4], w_tables[4])
    assert x_bound_check(3, 40, u_tables[3], w_tables[3])
    with pytest.raises(ValueError):
        x_bound_check(2, 6, u_tables[2], w_tables[2])


def test_excess_at_size_two_is_nonzero_but_bounded():
    # w_2 - u_2 = 2^(d-1): the excess does not vanish at n = 2, yet it
    # stays within the 2^-n ((2n-1)!! n!)^(d-1) bound for d >= 3.
    for d in (3, 4):
        u = compute_u(d, 2)
        w = compute_w(d, 2)
        assert w[2] - u[2] == 2 ** (d - 1)
        assert x_bound_check(d, 2, u, w)


def test_ratio_series_validation():
    with pytest.raises(ValueError):
        RatioSeries(RatioKind.U_RATIO, 3, ((2, Fraction(3, 2)),))
    with pytest.raises(ValueError):
        RatioSeries(RatioKind.W_RATIO, 3, ((2, Fraction(0)),))
    series = RatioSeries(RatioKind.W_RATIO, 3, ((2, Fraction(4, 3)),))
    assert series.values() == [Fraction(4, 3)]


def test_series_builders_start_at_two(u_tables, w_tables):
    assert u_ratio_series(3, u_tables[3], 10).points[0][0] == 2
    assert w_ratio_series(3, w_tables[3], 10).points[0][0] == 2
