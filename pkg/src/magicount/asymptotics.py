"""Diagnostics for the growth laws of the count sequences.

For d >= 3 the counts are compared to 2^(-dn) ((2n)!)^(d-1) through exact
rationals, so no tolerance enters; only the 2-dimensional law, which
involves sqrt(e/(pi n)), needs high-precision reals (mpmath).

The ratio u_n 2^(dn) / ((2n)!)^(d-1) equals v_n / ((2n-1)!!)^(d-1) for
n >= 2 and is therefore at most 1 there; at n = 1 it equals 2 because the
u/v bridge identity excludes that size, so series start at n = 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from magicount.exactmath import factorial, odd_double_factorial
from magicount.sequences import SequenceKind, SequenceTable


class RatioKind(enum.Enum):
    U_RATIO = "u_ratio"
    W_RATIO = "w_ratio"
    W2_RATIO = "w2_ratio"


@dataclass(frozen=True)
class RatioSeries:
    kind: RatioKind
    dimension: int
    points: tuple[tuple[int, object], ...]  # (n, Fraction) or (n, mpmath.mpf)

    def __post_init__(self):
        for n, value in self.points:
            if value <= 0:
                raise ValueError(f"ratio at n={n} is not positive")
            if self.kind is RatioKind.U_RATIO and value > 1:
                raise ValueError(f"u-ratio at n={n} exceeds 1")

    def values(self) -> list[object]:
        return [value for _, value in self.points]


def _require_entry(table: SequenceTable, kind: SequenceKind, n: int) -> int:
    if table.kind is not kind:
        raise ValueError(f"expected a {kind.value} table, got {table.kind.value}")
    if n not in table:
        raise ValueError(f"table has no entry for n={n}")
    return table[n]


def u_ratio(d: int, n: int, table: SequenceTable) -> Fraction:
    """u_n 2^(dn) / ((2n)!)^(d-1), in lowest terms."""
    if d < 3:
        raise ValueError(f"ratio diagnostics need d >= 3, got {d}")
    value = _require_entry(table, SequenceKind.U, n)
    return Fraction(value * 2 ** (d * n), factorial(2 * n) ** (d - 1))


def w_ratio(d: int, n: int, table: SequenceTable) -> Fraction:
    """w_n 2^(dn) / ((2n)!)^(d-1), in lowest terms."""
    if d < 3:
        raise ValueError(f"ratio diagnostics need d >= 3, got {d}")
    value = _require_entry(table, SequenceKind.W, n)
    return Fraction(value * 2 ** (d * n), factorial(2 * n) ** (d - 1))


def u_ratio_series(d: int, table: SequenceTable, n_max: int) -> RatioSeries:
    points = tuple((n, u_ratio(d, n, table)) for n in range(2, n_max + 1))
    return RatioSeries(RatioKind.U_RATIO, d, points)


def w_ratio_series(d: int, table: SequenceTable, n_max: int) -> RatioSeries:
    points = tuple((n, w_ratio(d, n, table)) for n in range(2, n_max + 1))
    return RatioSeries(RatioKind.W_RATIO, d, points)


def w2_ratio(n: int, table: SequenceTable, precision: int = 30) -> mpmath.mpf:
    """w_n / ((n!)^2 sqrt(e/(pi n))) at the requested decimal precision.

    Needs precision >= 20; e, pi and the square root are all evaluated with
    guard digits so the relative error stays far below 10^(2-precision).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if precision < 20:
        raise ValueError(f"precision must be >= 20, got {precision}")
    value = _require_entry(table, SequenceKind.W, n)
    if table.dimension != 2:
        raise ValueError("this diagnostic applies to dimension 2 only")
    ratio = Fraction(value, factorial(n) ** 2)
    with mpmath.workdps(precision + 10):
        scaled = mpmath.mpf(ratio.numerator) / mpmath.mpf(ratio.denominator)
        return scaled / mpmath.sqrt(mpmath.e / (mpmath.pi * n))


def w2_ratio_series(table: SequenceTable, n_max: int, precision: int = 30) -> RatioSeries:
    points = tuple((n, w2_ratio(n, table, precision)) for n in range(1, n_max + 1))
    return RatioSeries(RatioKind.W2_RATIO, 2, points)


def x_bound_check(
    d: int, n_max: int, u_table: SequenceTable, w_table: SequenceTable
) -> bool:
    """Check w_n - u_n <= 2^(-n) ((2n-1)!!)^(d-1) (n!)^(d-1) for 2 <= n <= n_max.

    Compared exactly after multiplying through by 2^n.
    """
    if d < 3:
        raise ValueError(f"the excess bound applies for d >= 3, got {d}")
    for n in range(2, n_max + 1):
        u = _require_entry(u_table, SequenceKind.U, n)
        w = _require_entry(w_table, SequenceKind.W, n)
        bound = (odd_double_factorial(n) * factorial(n)) ** (d - 1)
        if 2**n * (w - u) > bound:
            return False
    return True
