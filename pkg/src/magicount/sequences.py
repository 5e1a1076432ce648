"""Exact count sequences for d-dimensional matrices with hyperplane sums 2.

Four families are computed, all as exact integers:

  V   - tuples of d-1 fixed-point-free involutions on 2n points that,
        together with the standard involution, generate a transitive group;
  U   - indecomposable matrices (V and U are linked by
        2^n u_n = (n!)^(d-1) v_n for n >= 2);
  W   - all matrices, obtained from U by the exponential-principle
        convolution w_n = u_n + sum_{k<n} (k/n) C(n,k)^d u_k w_{n-k};
  W01 - zero-one matrices, obtained by the same convolution with the
        size-1 indecomposable count replaced by 0 (the unique size-1
        indecomposable matrix has entry 2, and every larger indecomposable
        matrix is zero-one, so dropping it counts exactly the zero-one
        matrices).

Every division performed by a recurrence is required to be exact and every
value non-negative; violations raise ConsistencyError since they can only
come from an implementation bug.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from magicount.errors import ConsistencyError
from magicount.exactmath import (
    binomial,
    even_double_factorial,
    factorial,
    odd_double_factorial,
)


class SequenceKind(enum.Enum):
    V = "v"
    U = "u"
    W = "w"
    W01 = "w01"


@dataclass(frozen=True)
class SequenceTable:
    """An immutable prefix of one of the count sequences.

    V and U tables start at index 1; W and W01 tables include index 0
    (the empty matrix).
    """

    kind: SequenceKind
    dimension: int
    entries: dict[int, int]

    def __getitem__(self, n: int) -> int:
        return self.entries[n]

    def __contains__(self, n: int) -> bool:
        return n in self.entries

    @property
    def first_index(self) -> int:
        return min(self.entries)

    @property
    def max_index(self) -> int:
        return max(self.entries)

    def indices(self) -> list[int]:
        return sorted(self.entries)

    def values(self) -> list[int]:
        return [self.entries[n] for n in self.indices()]


def _require_args(d: int, n_max: int, n_min: int) -> None:
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if n_max < n_min:
        raise ValueError(f"n_max must be >= {n_min}, got {n_max}")


def compute_v(d: int, n_max: int) -> SequenceTable:
    """Transitive involution-tuple counts v_1..v_{n_max} for dimension d.

    v_1 = 1 and, for n >= 2,
    v_n = ((2n-1)!!)^(d-1) - sum_{k=1}^{n-1} C(n-1,k-1) ((2n-2k-1)!!)^(d-1) v_k.
    """
    _require_args(d, n_max, 1)
    v: dict[int, int] = {1: 1}
    for n in range(2, n_max + 1):
        total = odd_double_factorial(n) ** (d - 1)
        for k in range(1, n):
            total -= (
                binomial(n - 1, k - 1)
                * odd_double_factorial(n - k) ** (d - 1)
                * v[k]
            )
        if total < 0:
            raise ConsistencyError(f"negative v at d={d}, n={n}: {total}")
        v[n] = total
    return SequenceTable(SequenceKind.V, d, v)


def compute_u(d: int, n_max: int) -> SequenceTable:
    """Indecomposable counts via the involution-tuple bridge.

    u_1 = 1 as a special case (the bridge identity fails at n = 1);
    u_n = (n!)^(d-1) v_n / 2^n for n >= 2, with the division exact.
    """
    v = compute_v(d, n_max)
    u: dict[int, int] = {1: 1}
    for n in range(2, n_max + 1):
        numerator = factorial(n) ** (d - 1) * v[n]
        quotient, remainder = divmod(numerator, 2**n)
        if remainder:
            raise ConsistencyError(
                f"2^{n} does not divide (n!)^(d-1) v_n at d={d}, n={n}"
            )
        u[n] = quotient
    return SequenceTable(SequenceKind.U, d, u)


def compute_u_direct(d: int, n_max: int) -> SequenceTable:
    """Indecomposable counts without going through the v sequence.

    Solves, for each n >= 2,

      ((2n-3)!!)^(d-1)
        + sum_{k=2}^{n} C(n-1,k-1) ((2n-2k-1)!!/k!)^(d-1) 2^k u_k
        = ((2n-1)!!)^(d-1)

    for u_n.  The quotients (2n-2k-1)!!/k! are generally non-integral, so
    the sum is carried in exact rationals; the resulting u_n must come out
    a non-negative integer.
    """
    _require_args(d, n_max, 1)
    u: dict[int, int] = {1: 1}
    for n in range(2, n_max + 1):
        rhs = Fraction(
            odd_double_factorial(n) ** (d - 1)
            - odd_double_factorial(n - 1) ** (d - 1)
        )
        for k in range(2, n):
            rhs -= (
                binomial(n - 1, k - 1)
                * Fraction(odd_double_factorial(n - k), factorial(k)) ** (d - 1)
                * 2**k
                * u[k]
            )
        value = rhs * Fraction(factorial(n) ** (d - 1), 2**n)
        if value.denominator != 1 or value < 0:
            raise ConsistencyError(
                f"direct recurrence gave non-integral or negative u at "
                f"d={d}, n={n}: {value}"
            )
        u[n] = value.numerator
    return SequenceTable(SequenceKind.U, d, u)


def _convolve(d: int, n_max: int, u: dict[int, int], kind: SequenceKind) -> SequenceTable:
    # Accumulate k C(n,k)^d u_k w_{n-k} and divide by n once at the end;
    # exactness of that division is a strong self-test of the inputs.
    w: dict[int, int] = {0: 1}
    for n in range(1, n_max + 1):
        acc = 0
        for k in range(1, n):
            acc += k * binomial(n, k) ** d * u[k] * w[n - k]
        quotient, remainder = divmod(acc, n)
        if remainder:
            raise ConsistencyError(
                f"convolution sum not divisible by n at d={d}, n={n}"
            )
        w[n] = u[n] + quotient
    return SequenceTable(kind, d, w)


def compute_w(d: int, n_max: int) -> SequenceTable:
    """Counts of all matrices, w_0..w_{n_max}; w_0 = 1 for the empty matrix."""
    _require_args(d, n_max, 0)
    u = compute_u(d, n_max).entries if n_max >= 1 else {}
    return _convolve(d, n_max, u, SequenceKind.W)


def compute_zero_one(d: int, n_max: int) -> SequenceTable:
    """Counts of zero-one matrices: the W convolution with u_1 set to 0."""
    _require_args(d, n_max, 0)
    u = dict(compute_u(d, n_max).entries) if n_max >= 1 else {}
    if 1 in u:
        u[1] = 0
    return _convolve(d, n_max, u, SequenceKind.W01)


def closed_u2(n: int) -> int:
    """Closed form of the 2-dimensional indecomposable count.

    1 for n = 1, n!(n-1)!/2 for n > 1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return 1
    return factorial(n) * factorial(n - 1) // 2


def closed_w2(n: int) -> int:
    """Closed form of the 2-dimensional total count.

    (n!)^2 sum_{k=0}^{n} C(2k,k) / (2^(n+k) (n-k)!), evaluated exactly.
    The 2^(n+k) denominator is the one consistent with the generating
    function (1-z)^(-1/2) e^(z/2); the variant 2^(n-k) gives 5/2 at n = 1
    and must not be used.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    total = sum(
        Fraction(binomial(2 * k, k), 2 ** (n + k) * factorial(n - k))
        for k in range(n + 1)
    ) * factorial(n) ** 2
    if total.denominator != 1:
        raise ConsistencyError(f"closed w formula non-integral at n={n}: {total}")
    return total.numerator


def closed_v2(n: int) -> int:
    """Closed form of the 2-dimensional tuple count: (2n-2)!!."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return even_double_factorial(n - 1)


def check_double_factorial_identity(n: int) -> bool:
    """Check sum_{k=1}^{n} C(n-1,k-1) (2n-2k-1)!! (2k-2)!! = (2n-1)!!."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    total = sum(
        binomial(n - 1, k - 1)
        * odd_double_factorial(n - k)
        * even_double_factorial(k - 1)
        for k in range(1, n + 1)
    )
    return total == odd_double_factorial(n)
