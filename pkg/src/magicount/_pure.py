"""Pure-Python counting kernels.

Fallback implementations of the two hot loops; magicount.kernels swaps in
the compiled versions from magicount._ck when that extension is available.
Both backends must agree bit for bit.
"""

from __future__ import annotations

from magicount.errors import BudgetExceededError


def _fpf_partner_arrays(m: int) -> list[tuple[int, ...]]:
    """All fixed-point-free involutions on {0, ..., m-1} as partner tuples."""
    out: list[tuple[int, ...]] = []
    partner = [-1] * m

    def rec(lowest: int) -> None:
        while lowest < m and partner[lowest] >= 0:
            lowest += 1
        if lowest == m:
            out.append(tuple(partner))
            return
        for j in range(lowest + 1, m):
            if partner[j] < 0:
                partner[lowest], partner[j] = j, lowest
                rec(lowest + 1)
                partner[lowest] = partner[j] = -1

    rec(0)
    return out


def _connected_after(parent: list[int], components: int, partner: tuple[int, ...]) -> tuple[list[int], int]:
    # Contract each pair (i, partner[i]) of one involution into the running
    # union-find over the n cycle nodes of the standard involution.
    parent = parent[:]
    for i, j in enumerate(partner):
        if j > i:
            a, b = i >> 1, j >> 1
            while parent[a] != a:
                a = parent[a]
            while parent[b] != b:
                b = parent[b]
            if a != b:
                parent[b] = a
                components -= 1
    return parent, components


def count_transitive_tuples(d: int, n: int) -> int:
    """Number of (d-1)-tuples of fixed-point-free involutions on 2n points
    that, together with the standard involution, connect everything.

    The standard involution's pairs (2j-1, 2j) are contracted upfront, so
    connectivity is checked over n nodes.
    """
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    m = 2 * n
    pool = _fpf_partner_arrays(m)
    levels = d - 1
    start_parent = list(range(n))

    def rec(level: int, parent: list[int], components: int) -> int:
        total = 0
        for partner in pool:
            p2, c2 = _connected_after(parent, components, partner)
            if level == levels:
                total += c2 == 1
            else:
                total += rec(level + 1, p2, c2)
        return total

    return rec(1, start_parent, n)


def count_tensor_kinds(d: int, n: int, budget: int) -> tuple[int, int, int]:
    """Counts of (all, zero-one, indecomposable) 2-magic tensors of
    dimension d and size n, by residual-pruned backtracking over cells in
    lexicographic order.  Raises BudgetExceededError past ``budget`` nodes.
    """
    if d < 1 or n < 1:
        raise ValueError("dimension and size must be >= 1")
    cells = n**d
    coords = []
    for idx in range(cells):
        rest, coord = idx, []
        for _ in range(d):
            rest, c = divmod(rest, n)
            coord.append(c)
        coords.append(tuple(reversed(coord)))
    closing = [
        [
            axis
            for axis in range(d)
            if all(c == n - 1 for j, c in enumerate(coord) if j != axis)
        ]
        for coord in coords
    ]
    residual = [[2] * n for _ in range(d)]
    entries = [0] * cells
    totals = [0, 0, 0]
    twos = 0
    nodes = 0

    def indecomposable() -> bool:
        parent = list(range(d * n))
        components = d * n

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for idx in range(cells):
            if entries[idx]:
                coord = coords[idx]
                base = find(coord[0])
                for axis in range(1, d):
                    other = find(axis * n + coord[axis])
                    if other != base:
                        parent[other] = base
                        components -= 1
        return components == 1

    def rec(idx: int) -> None:
        nonlocal twos, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"enumeration exceeded {budget} search nodes at d={d}, n={n}",
                dimension=d,
                size=n,
                budget=budget,
            )
        if idx == cells:
            totals[0] += 1
            if twos == 0:
                totals[1] += 1
            if indecomposable():
                totals[2] += 1
            return
        coord = coords[idx]
        upper = min(2, min(residual[axis][coord[axis]] for axis in range(d)))
        lower = max(
            (residual[axis][coord[axis]] for axis in closing[idx]), default=0
        )
        for entry in range(lower, upper + 1):
            for axis in range(d):
                residual[axis][coord[axis]] -= entry
            entries[idx] = entry
            twos += entry == 2
            rec(idx + 1)
            twos -= entry == 2
            entries[idx] = 0
            for axis in range(d):
                residual[axis][coord[axis]] += entry

    rec(0)
    return tuple(totals)
