"""Exact enumeration of d-dimensional matrices whose hyperplane sums all
equal 2: recurrences, closed forms, brute-force oracles, and growth-law
diagnostics."""

from magicount.errors import BudgetExceededError, ConsistencyError
from magicount.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "BudgetExceededError", "ConsistencyError", "__version__"]
