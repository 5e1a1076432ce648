"""Shared exceptions and resource limits."""

from __future__ import annotations

# Default ceiling for brute-force search spaces (tuple counts or search nodes).
DEFAULT_BUDGET = 10**8


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (exact division, sign, or bijection)."""


class BudgetExceededError(RuntimeError):
    """A brute-force search would exceed (or has exceeded) its node budget."""

    def __init__(self, message, *, dimension=None, size=None, required=None, budget=None):
        super().__init__(message)
        self.dimension = dimension
        self.size = size
        self.required = required
        self.budget = budget
