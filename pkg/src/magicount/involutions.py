"""Fixed-point-free involutions on {1, ..., 2n} and transitivity of the
group they generate.

For involutions, the generated permutation group is transitive exactly when
the multigraph whose edges are all the transpositions is connected, so
transitivity reduces to a union-find pass instead of group closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from magicount.unionfind import DisjointSet


@dataclass(frozen=True)
class Involution:
    """A fixed-point-free involutive pairing of {1, ..., 2n}.

    partner[i] is the element paired with i; index 0 is an unused sentinel
    so that the array reads 1-based.
    """

    partner: tuple[int, ...]

    def __post_init__(self):
        m = len(self.partner) - 1
        if m < 2 or m % 2 != 0 or self.partner[0] != 0:
            raise ValueError("partner array must be 1-based with even size >= 2")
        for i in range(1, m + 1):
            j = self.partner[i]
            if not 1 <= j <= m or j == i or self.partner[j] != i:
                raise ValueError(f"not a fixed-point-free involution at {i}")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> Involution:
        m = 2 * len(pairs)
        partner = [0] * (m + 1)
        for a, b in pairs:
            if not (1 <= a <= m and 1 <= b <= m) or partner[a] or partner[b]:
                raise ValueError(f"pairs do not tile {{1,...,{m}}}")
            partner[a], partner[b] = b, a
        return cls(tuple(partner))

    @property
    def size(self) -> int:
        """Number of elements moved, i.e. 2n."""
        return len(self.partner) - 1

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """The transpositions as (min, max) pairs, sorted by minimum."""
        return tuple(
            (i, self.partner[i])
            for i in range(1, self.size + 1)
            if i < self.partner[i]
        )

    def __str__(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.pairs())


def standard_involution(n: int) -> Involution:
    """(1,2)(3,4)...(2n-1,2n)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return Involution.from_pairs([(2 * j - 1, 2 * j) for j in range(1, n + 1)])


def enumerate_fpf_involutions(m: int) -> Iterator[Involution]:
    """All fixed-point-free involutions on {1, ..., m}, m even.

    Deterministic order: the smallest unpaired element is repeatedly paired
    with each larger unpaired element in increasing order.  Yields (m-1)!!
    involutions in total.
    """
    if m < 2 or m % 2 != 0:
        raise ValueError(f"need even m >= 2, got {m}")
    partner = [0] * (m + 1)

    def rec(lowest: int) -> Iterator[Involution]:
        while lowest <= m and partner[lowest]:
            lowest += 1
        if lowest > m:
            yield Involution(tuple(partner))
            return
        for j in range(lowest + 1, m + 1):
            if not partner[j]:
                partner[lowest], partner[j] = j, lowest
                yield from rec(lowest + 1)
                partner[lowest] = partner[j] = 0

    yield from rec(1)


def is_transitive(involutions: Sequence[Involution]) -> bool:
    """Whether the group generated by the involutions is transitive.

    Equivalent to connectivity of the union of their pair graphs.
    """
    if not involutions:
        raise ValueError("need at least one involution")
    m = involutions[0].size
    if any(t.size != m for t in involutions):
        raise ValueError("involutions act on different ground sets")
    dsu = DisjointSet(range(1, m + 1))
    for t in involutions:
        for a, b in t.pairs():
            dsu.union(a, b)
    return dsu.components == 1
