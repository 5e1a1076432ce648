"""Sparse d-dimensional tensors with hyperplane-sum invariants, the
involution-tuple correspondence, decomposability, and brute-force
enumeration.

Coordinates are 1-based d-tuples over {1, ..., n}; only nonzero entries are
stored, and an entry is always 1 or 2 (a hyperplane summing to 2 cannot
hold more).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from magicount.errors import DEFAULT_BUDGET, BudgetExceededError, ConsistencyError
from magicount.involutions import Involution, is_transitive, standard_involution
from magicount.unionfind import DisjointSet

Coordinate = tuple[int, ...]


@dataclass(frozen=True)
class MagicTensor:
    """A d-dimensional size-n tensor stored as a sparse cell -> entry map."""

    dimension: int
    size: int
    cells: Mapping[Coordinate, int]

    def __post_init__(self):
        if self.dimension < 1 or self.size < 1:
            raise ValueError("dimension and size must be >= 1")
        for coord, entry in self.cells.items():
            if len(coord) != self.dimension or not all(
                1 <= c <= self.size for c in coord
            ):
                raise ValueError(f"coordinate {coord} out of range")
            if entry not in (1, 2):
                raise ValueError(f"entry at {coord} must be 1 or 2, got {entry}")

    def total(self) -> int:
        return sum(self.cells.values())

    @property
    def is_zero_one(self) -> bool:
        return all(entry == 1 for entry in self.cells.values())

    def hyperplane_sum(self, axis: int, value: int) -> int:
        return sum(
            entry for coord, entry in self.cells.items() if coord[axis] == value
        )

    def magic_sum(self) -> int | None:
        """The common hyperplane sum, or None if the sums are not uniform."""
        sums = {
            self.hyperplane_sum(axis, value)
            for axis in range(self.dimension)
            for value in range(1, self.size + 1)
        }
        if len(sums) != 1:
            return None
        return sums.pop()

    @property
    def is_two_magic(self) -> bool:
        return self.magic_sum() == 2

    def require_two_magic(self) -> None:
        if not self.is_two_magic:
            raise ValueError("tensor is not 2-magic")

    def support(self) -> list[Coordinate]:
        return sorted(self.cells)


@dataclass(frozen=True)
class BlockSplit:
    """A decomposition witness: per axis, an ordered bipartition of the
    index set with equal first-part sizes."""

    first: tuple[frozenset[int], ...]
    second: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.first) != len(self.second) or not self.first:
            raise ValueError("need one (first, second) pair per axis")
        sizes = {len(part) for part in self.first}
        if len(sizes) != 1:
            raise ValueError("first parts must have equal sizes across axes")
        universe = None
        for b1, b2 in zip(self.first, self.second):
            if not b1 or not b2 or b1 & b2:
                raise ValueError("parts must be non-empty and disjoint")
            if universe is None:
                universe = b1 | b2
            elif b1 | b2 != universe:
                raise ValueError("parts must cover the same index set on each axis")


def _cycle_numbering(t: Involution, numbering: Mapping[int, int] | None) -> dict[int, int]:
    """Map each element to the 1..n number of its cycle.

    ``numbering`` keys are the cycle minima; default is min-element rank
    order.
    """
    minima = [a for a, _ in t.pairs()]
    if numbering is None:
        numbering = {a: rank + 1 for rank, a in enumerate(minima)}
    if sorted(numbering) != minima or sorted(numbering.values()) != list(
        range(1, len(minima) + 1)
    ):
        raise ValueError("numbering must biject cycle minima onto 1..n")
    element_to_number = {}
    for a, b in t.pairs():
        element_to_number[a] = element_to_number[b] = numbering[a]
    return element_to_number


def tuple_to_tensor(
    involutions: Sequence[Involution],
    numberings: Sequence[Mapping[int, int] | None] | None = None,
) -> MagicTensor:
    """Build the 2-magic tensor encoded by a tuple of involutions.

    The first involution must be the standard one; its cycle (2j-1, 2j)
    always gets number j.  Each remaining involution may carry an explicit
    cycle numbering (keyed by cycle minima); by default cycles are numbered
    in min-element order.  Element k of {1, ..., 2n} contributes one unit
    at the coordinate whose i-th component is the number of the cycle of
    the i-th involution containing k; the two elements of a shared cycle
    may land on the same cell, producing an entry 2.
    """
    if not involutions:
        raise ValueError("need at least one involution")
    m = involutions[0].size
    n = m // 2
    if any(t.size != m for t in involutions):
        raise ValueError("involutions act on different ground sets")
    if involutions[0] != standard_involution(n):
        raise ValueError("first involution must be the standard one")
    if numberings is None:
        numberings = [None] * (len(involutions) - 1)
    if len(numberings) != len(involutions) - 1:
        raise ValueError("need one numbering per involution after the first")

    maps = [_cycle_numbering(involutions[0], None)]
    for t, numbering in zip(involutions[1:], numberings):
        maps.append(_cycle_numbering(t, numbering))

    cells: dict[Coordinate, int] = {}
    for k in range(1, m + 1):
        coord = tuple(mp[k] for mp in maps)
        cells[coord] = cells.get(coord, 0) + 1
    tensor = MagicTensor(len(involutions), n, cells)
    if not tensor.is_two_magic:
        raise ConsistencyError("constructed tensor failed the hyperplane check")
    return tensor


def labeled_involution_tuples(
    t: MagicTensor,
) -> Iterator[tuple[Involution, ...]]:
    """Yield the involution tuple of each of the 2^n labelings of ``t``.

    A labeling numbers the 2n unit cells so that the two cells with first
    coordinate j get numbers 2j-1 and 2j (in either order).  The i-th
    involution then pairs the numbers of cells sharing their i-th
    coordinate.  Requires a zero-one 2-magic tensor.
    """
    t.require_two_magic()
    if not t.is_zero_one:
        raise ValueError("labelings are defined for zero-one tensors only")
    groups = []
    for j in range(1, t.size + 1):
        group = sorted(c for c in t.cells if c[0] == j)
        if len(group) != 2:
            raise ConsistencyError("zero-one 2-magic tensor must have cell pairs")
        groups.append(group)

    for swaps in itertools.product((False, True), repeat=t.size):
        number_of: dict[Coordinate, int] = {}
        for j, (group, swap) in enumerate(zip(groups, swaps), start=1):
            first, second = (group[1], group[0]) if swap else group
            number_of[first] = 2 * j - 1
            number_of[second] = 2 * j
        tuple_out = []
        for axis in range(t.dimension):
            pairs = []
            for value in range(1, t.size + 1):
                hit = sorted(
                    number_of[c] for c in t.cells if c[axis] == value
                )
                pairs.append((hit[0], hit[1]))
            tuple_out.append(Involution.from_pairs(pairs))
        yield tuple(tuple_out)


def tensor_labelings(t: MagicTensor) -> int:
    """Count the valid labelings of an indecomposable zero-one tensor.

    Enumerates all 2^n per-first-coordinate swaps, verifies that each one
    yields fixed-point-free involutions (standard in the first slot)
    generating a transitive group, and returns the count, which is 2^n.
    Size-1 tensors are rejected: the correspondence excludes them.
    """
    t.require_two_magic()
    if t.size == 1:
        raise ValueError("size-1 tensors are outside the labeling correspondence")
    if not t.is_zero_one:
        raise ValueError("labelings are defined for zero-one tensors only")
    if is_decomposable(t) is not None:
        raise ValueError("tensor is decomposable")
    count = 0
    expected_first = standard_involution(t.size)
    for tup in labeled_involution_tuples(t):
        if tup[0] != expected_first:
            raise ConsistencyError("labeling did not produce the standard involution")
        if not is_transitive(tup):
            raise ConsistencyError("labeling of indecomposable tensor not transitive")
        count += 1
    if count != 2**t.size:
        raise ConsistencyError(f"expected 2^{t.size} labelings, got {count}")
    return count


def is_decomposable(t: MagicTensor) -> BlockSplit | None:
    """Return a block-split witness if the tensor decomposes, else None.

    Connectivity of the d*n (axis, value) slots through the support cells
    decides it: each cell ties together its d slots, and more than one
    connected component is exactly a decomposition.  Equal first-part sizes
    across axes come for free because the input must be magic with a
    positive sum (every hyperplane then carries sum s, so each component
    spans s * |component values| cells counted with entries, per axis).
    """
    s = t.magic_sum()
    if s is None or s < 1:
        raise ValueError("decomposability needs uniform positive hyperplane sums")
    slots = [
        (axis, value)
        for axis in range(t.dimension)
        for value in range(1, t.size + 1)
    ]
    dsu = DisjointSet(slots)
    for coord in t.cells:
        base = (0, coord[0])
        for axis in range(1, t.dimension):
            dsu.union(base, (axis, coord[axis]))
    if dsu.components == 1:
        return None
    component = dsu.component_of((0, 1))
    first = tuple(
        frozenset(value for axis2, value in component if axis2 == axis)
        for axis in range(t.dimension)
    )
    second = tuple(
        frozenset(range(1, t.size + 1)) - part for part in first
    )
    return BlockSplit(first, second)


def is_sum_of_unit_magic(t: MagicTensor) -> bool:
    """Whether t = p1 + p2 with both parts 1-magic.

    A 1-magic part has exactly one unit in every hyperplane.  Per first
    coordinate, the hyperplane of t holds either one entry-2 cell (which is
    forced into both parts) or two unit cells (one goes to p1); backtracking
    over those choices with collision pruning on the remaining axes decides
    existence.  p2 = t - p1 is automatically 1-magic whenever p1 is.
    """
    t.require_two_magic()
    groups: list[list[Coordinate]] = []
    for j in range(1, t.size + 1):
        group = sorted(c for c in t.cells if c[0] == j)
        groups.append(group)

    used = [[False] * (t.size + 1) for _ in range(t.dimension)]

    def place(coord: Coordinate) -> bool:
        if any(used[axis][coord[axis]] for axis in range(1, t.dimension)):
            return False
        for axis in range(1, t.dimension):
            used[axis][coord[axis]] = True
        return True

    def unplace(coord: Coordinate) -> None:
        for axis in range(1, t.dimension):
            used[axis][coord[axis]] = False

    def rec(j: int) -> bool:
        if j == len(groups):
            return True
        for coord in groups[j]:
            if place(coord):
                if rec(j + 1):
                    unplace(coord)
                    return True
                unplace(coord)
        return False

    return rec(0)


def enumerate_two_magic(
    d: int,
    n: int,
    zero_one_only: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[MagicTensor]:
    """Yield every d-dimensional size-n 2-magic tensor exactly once.

    Backtracks over cells in lexicographic coordinate order, keeping the
    residual sum of every hyperplane; the last cell of a hyperplane must
    consume its residual exactly.  Each recursive step costs one node
    against ``budget``.
    """
    if d < 1 or n < 1:
        raise ValueError("dimension and size must be >= 1")
    coords = list(itertools.product(range(1, n + 1), repeat=d))
    closing = [
        [
            axis
            for axis in range(d)
            if all(c == n for j, c in enumerate(coord) if j != axis)
        ]
        for coord in coords
    ]
    residual = [[2] * (n + 1) for _ in range(d)]
    assignment: dict[Coordinate, int] = {}
    nodes = 0

    def rec(idx: int) -> Iterator[MagicTensor]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"enumeration exceeded {budget} search nodes at d={d}, n={n}",
                dimension=d,
                size=n,
                budget=budget,
            )
        if idx == len(coords):
            yield MagicTensor(d, n, dict(assignment))
            return
        coord = coords[idx]
        upper = min(2, min(residual[axis][coord[axis]] for axis in range(d)))
        lower = max(
            (residual[axis][coord[axis]] for axis in closing[idx]), default=0
        )
        if zero_one_only:
            upper = min(upper, 1)
        for entry in range(lower, upper + 1):
            for axis in range(d):
                residual[axis][coord[axis]] -= entry
            if entry:
                assignment[coord] = entry
            yield from rec(idx + 1)
            if entry:
                del assignment[coord]
            for axis in range(d):
                residual[axis][coord[axis]] += entry

    yield from rec(0)
