"""Arbitrary-precision combinatorial primitives.

Everything here is exact integer arithmetic.  Factorials and double
factorials are memoized in append-only tables because the sequence
recurrences reuse the same factors O(n^2) times; growth is serialized by a
lock so the tables can be shared across threads.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

_lock = threading.Lock()
_factorial = [1]  # _factorial[n] = n!
_odd_df = [1]     # _odd_df[m] = (2m-1)!!, with (-1)!! = 1
_even_df = [1]    # _even_df[m] = (2m)!!, with 0!! = 1


def _grow(table: list[int], upto: int, step) -> None:
    if len(table) > upto:
        return
    with _lock:
        while len(table) <= upto:
            m = len(table)
            table.append(step(m, table[m - 1]))


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial undefined for negative n: {n}")
    _grow(_factorial, n, lambda m, last: last * m)
    return _factorial[n]


def odd_double_factorial(m: int) -> int:
    """(2m-1)!! = 1*3*5*...*(2m-1) for m >= 0; the m = 0 product is empty (= 1)."""
    if m < 0:
        raise ValueError(f"odd double factorial undefined for negative m: {m}")
    _grow(_odd_df, m, lambda i, last: last * (2 * i - 1))
    return _odd_df[m]


def even_double_factorial(m: int) -> int:
    """(2m)!! = 2*4*...*(2m) for m >= 0; the m = 0 product is empty (= 1)."""
    if m < 0:
        raise ValueError(f"even double factorial undefined for negative m: {m}")
    _grow(_even_df, m, lambda i, last: last * 2 * i)
    return _even_df[m]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the convention 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial undefined for negative n: {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def double_factorial_ratio_bounds_hold(n: int) -> bool:
    """Check sqrt(2(n+1)) <= 2^n n!/(2n-1)!! <= 2 sqrt(n) for n >= 1.

    Both inequalities are verified after squaring, entirely in integers, so
    no floating-point tolerance is involved.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    odd_sq = odd_double_factorial(n) ** 2
    mid_sq = (2**n * factorial(n)) ** 2
    return 2 * (n + 1) * odd_sq <= mid_sq <= 4 * n * odd_sq


def matching_ratio_lower_bound_holds(n: int, k: int) -> bool:
    """Check (2n-1)!!/((2k-1)!!(2n-2k-1)!!) >= C(n,k) sqrt((k+1)(n-k+1)/n).

    The left side is the ratio of perfect-matching counts on 2n, 2k and
    2(n-k) points.  Compared after squaring and clearing the denominator n,
    so the check is exact.  The bound is valid for 1 <= k <= n-1; at k = 0
    and k = n it reverses (it reduces to n >= n+1), and this function
    reports that failure honestly rather than special-casing it.
    """
    if n < 1 or k < 0 or k > n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    lhs = n * odd_double_factorial(n) ** 2
    rhs = (
        binomial(n, k) ** 2
        * (k + 1)
        * (n - k + 1)
        * (odd_double_factorial(k) * odd_double_factorial(n - k)) ** 2
    )
    return lhs >= rhs


def fraction_to_decimal(value: Fraction, digits: int) -> str:
    """Render a rational as a fixed-point decimal string, rounded half up.

    Works by scaled integer division, so it is exact and immune to the
    float range limits that ratios of large factorials would overflow.
    """
    if digits < 0:
        raise ValueError(f"digits must be >= 0, got {digits}")
    num, den = value.numerator, value.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    scaled = (2 * num * 10**digits + den) // (2 * den)
    text = str(scaled).rjust(digits + 1, "0")
    if digits == 0:
        return sign + text
    return f"{sign}{text[:-digits]}.{text[-digits:]}"
