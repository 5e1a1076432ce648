"""Brute-force ground truth, independent of the sequence recurrences.

Counting runs go through magicount.kernels (compiled when available); the
object-level enumeration lives in magicount.tensors.  Search spaces are
guarded by an explicit budget so oracle runs stay bounded and reproducible.
"""

from __future__ import annotations

from typing import NamedTuple

from magicount import kernels
from magicount.errors import DEFAULT_BUDGET, BudgetExceededError
from magicount.exactmath import odd_double_factorial


class TensorCounts(NamedTuple):
    total: int
    zero_one: int
    indecomposable: int


def count_v_oracle(d: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Count (d-1)-tuples of fixed-point-free involutions on 2n points that
    generate a transitive group together with the standard involution.

    Rejects upfront when the ((2n-1)!!)^(d-1) tuple space exceeds the
    budget, reporting the required size.
    """
    if d < 2 or n < 1:
        raise ValueError(f"need d >= 2 and n >= 1, got d={d}, n={n}")
    space = odd_double_factorial(n) ** (d - 1)
    if space > budget:
        raise BudgetExceededError(
            f"tuple space for d={d}, n={n} needs {space} > budget {budget}",
            dimension=d,
            size=n,
            required=space,
            budget=budget,
        )
    return kernels.count_transitive_tuples(d, n)


def count_tensor_kinds(d: int, n: int, budget: int = DEFAULT_BUDGET) -> TensorCounts:
    """Counts of (all, zero-one, indecomposable) 2-magic tensors by direct
    backtracking enumeration."""
    if d < 1 or n < 1:
        raise ValueError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    return TensorCounts(*kernels.count_tensor_kinds(d, n, budget))
