# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; semantics mirror magicount._pure exactly."""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

from magicount.errors import BudgetExceededError

# Pools above this many bytes are not materialized (streaming or refusal).
DEF POOL_BYTE_CAP = 1 << 28
DEF CELL_CAP = 1 << 22


cdef long long _gen_pool(signed char* partner, int m, signed char* pool,
                         long long slot) noexcept:
    cdef int lowest = 0, j
    while lowest < m and partner[lowest] >= 0:
        lowest += 1
    if lowest == m:
        memcpy(pool + slot * m, partner, m)
        return slot + 1
    for j in range(lowest + 1, m):
        if partner[j] < 0:
            partner[lowest] = <signed char> j
            partner[j] = <signed char> lowest
            slot = _gen_pool(partner, m, pool, slot)
            partner[lowest] = -1
            partner[j] = -1
    return slot


cdef long long _stream_d2(signed char* partner, int m, int n, int* parent) noexcept:
    # Enumerate the free involution directly and test connectivity at each
    # leaf; avoids materializing huge pools in the two-dimensional case.
    cdef int lowest = 0, i, j, a, b, c
    cdef long long total = 0
    while lowest < m and partner[lowest] >= 0:
        lowest += 1
    if lowest == m:
        for i in range(n):
            parent[i] = i
        c = n
        for i in range(m):
            j = partner[i]
            if j > i:
                a = i >> 1
                b = j >> 1
                while parent[a] != a:
                    a = parent[a]
                while parent[b] != b:
                    b = parent[b]
                if a != b:
                    parent[b] = a
                    c -= 1
        return 1 if c == 1 else 0
    for j in range(lowest + 1, m):
        if partner[j] < 0:
            partner[lowest] = <signed char> j
            partner[j] = <signed char> lowest
            total += _stream_d2(partner, m, n, parent)
            partner[lowest] = -1
            partner[j] = -1
    return total


cdef long long _rec_levels(signed char* pool, long long pool_count, int m, int n,
                           int level, int levels, int* parents, int* comps) noexcept:
    # parents holds one union-find array of size n per level; level 0 is the
    # standard involution's contraction (the identity partition of cycles).
    cdef long long total = 0, p
    cdef int i, j, a, b, c
    cdef int* cur = parents + level * n
    cdef int* prev = parents + (level - 1) * n
    cdef signed char* inv
    for p in range(pool_count):
        inv = pool + p * m
        memcpy(cur, prev, n * sizeof(int))
        c = comps[level - 1]
        for i in range(m):
            j = inv[i]
            if j > i:
                a = i >> 1
                b = j >> 1
                while cur[a] != a:
                    a = cur[a]
                while cur[b] != b:
                    b = cur[b]
                if a != b:
                    cur[b] = a
                    c -= 1
        if level == levels:
            if c == 1:
                total += 1
        else:
            comps[level] = c
            total += _rec_levels(pool, pool_count, m, n, level + 1, levels,
                                 parents, comps)
    return total


def count_transitive_tuples(int d, int n):
    """Number of (d-1)-tuples of fixed-point-free involutions on 2n points
    that, together with the standard involution, connect everything."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    cdef int m = 2 * n
    if m > 120:
        raise MemoryError("ground set too large for the compiled kernel")

    pool_count_py = 1
    for i_py in range(1, n + 1):
        pool_count_py *= 2 * i_py - 1

    cdef signed char* partner = NULL
    cdef signed char* pool = NULL
    cdef int* parents = NULL
    cdef int* comps = NULL
    cdef long long pool_count, total
    cdef int i, levels = d - 1

    if d == 2 and pool_count_py * m > POOL_BYTE_CAP:
        partner = <signed char*> malloc(m)
        parents = <int*> malloc(n * sizeof(int))
        if partner == NULL or parents == NULL:
            free(partner)
            free(parents)
            raise MemoryError()
        try:
            for i in range(m):
                partner[i] = -1
            return _stream_d2(partner, m, n, parents)
        finally:
            free(partner)
            free(parents)

    if pool_count_py * m > POOL_BYTE_CAP:
        raise MemoryError(
            "involution pool too large to materialize; lower n or d"
        )
    pool_count = pool_count_py

    partner = <signed char*> malloc(m)
    pool = <signed char*> malloc(pool_count * m)
    parents = <int*> malloc((levels + 1) * n * sizeof(int))
    comps = <int*> malloc((levels + 1) * sizeof(int))
    if partner == NULL or pool == NULL or parents == NULL or comps == NULL:
        free(partner)
        free(pool)
        free(parents)
        free(comps)
        raise MemoryError()
    try:
        for i in range(m):
            partner[i] = -1
        _gen_pool(partner, m, pool, 0)
        for i in range(n):
            parents[i] = i
        comps[0] = n
        total = _rec_levels(pool, pool_count, m, n, 1, levels, parents, comps)
        return total
    finally:
        free(partner)
        free(pool)
        free(parents)
        free(comps)


cdef int _tk_rec(int idx, int cells, int d, int n,
                 int* coords, unsigned char* closing, signed char* entries,
                 int* residual, int* parent,
                 long long* counters, long long budget) noexcept:
    # counters: 0 total, 1 zero-one, 2 indecomposable, 3 live 2-entries,
    # 4 nodes spent.  Returns -1 when the node budget is exhausted.
    cdef int axis, c, upper, lower, entry, i, a, b, comp
    counters[4] += 1
    if counters[4] > budget:
        return -1
    if idx == cells:
        counters[0] += 1
        if counters[3] == 0:
            counters[1] += 1
        for i in range(d * n):
            parent[i] = i
        comp = d * n
        for i in range(cells):
            if entries[i]:
                a = coords[i * d]
                while parent[a] != a:
                    a = parent[a]
                for axis in range(1, d):
                    b = axis * n + coords[i * d + axis]
                    while parent[b] != b:
                        b = parent[b]
                    if b != a:
                        parent[b] = a
                        comp -= 1
        if comp == 1:
            counters[2] += 1
        return 0
    upper = 2
    for axis in range(d):
        c = residual[axis * n + coords[idx * d + axis]]
        if c < upper:
            upper = c
    lower = 0
    for axis in range(d):
        if closing[idx * d + axis]:
            c = residual[axis * n + coords[idx * d + axis]]
            if c > lower:
                lower = c
    for entry in range(lower, upper + 1):
        for axis in range(d):
            residual[axis * n + coords[idx * d + axis]] -= entry
        entries[idx] = <signed char> entry
        if entry == 2:
            counters[3] += 1
        if _tk_rec(idx + 1, cells, d, n, coords, closing, entries, residual,
                   parent, counters, budget) < 0:
            return -1
        if entry == 2:
            counters[3] -= 1
        entries[idx] = 0
        for axis in range(d):
            residual[axis * n + coords[idx * d + axis]] += entry
    return 0


def count_tensor_kinds(int d, int n, long long budget):
    """Counts of (all, zero-one, indecomposable) 2-magic tensors of
    dimension d and size n."""
    if d < 1 or n < 1:
        raise ValueError("dimension and size must be >= 1")
    cells_py = 1
    for _ in range(d):
        cells_py *= n
    if cells_py > CELL_CAP:
        raise MemoryError("cell grid too large for the compiled kernel")
    cdef int cells = cells_py
    cdef int* coords = <int*> malloc(cells * d * sizeof(int))
    cdef unsigned char* closing = <unsigned char*> malloc(cells * d)
    cdef signed char* entries = <signed char*> malloc(cells)
    cdef int* residual = <int*> malloc(d * n * sizeof(int))
    cdef int* parent = <int*> malloc(d * n * sizeof(int))
    cdef long long counters[5]
    cdef int idx, rest, axis, j, ok, last
    if (coords == NULL or closing == NULL or entries == NULL
            or residual == NULL or parent == NULL):
        free(coords)
        free(closing)
        free(entries)
        free(residual)
        free(parent)
        raise MemoryError()
    try:
        for idx in range(cells):
            rest = idx
            for axis in range(d - 1, -1, -1):
                coords[idx * d + axis] = rest % n
                rest //= n
            for axis in range(d):
                last = 1
                for j in range(d):
                    if j != axis and coords[idx * d + j] != n - 1:
                        last = 0
                        break
                closing[idx * d + axis] = last
            entries[idx] = 0
        for idx in range(d * n):
            residual[idx] = 2
        for idx in range(5):
            counters[idx] = 0
        ok = _tk_rec(0, cells, d, n, coords, closing, entries, residual,
                     parent, counters, budget)
    finally:
        free(coords)
        free(closing)
        free(entries)
        free(residual)
        free(parent)
    if ok < 0:
        raise BudgetExceededError(
            f"enumeration exceeded {budget} search nodes at d={d}, n={n}",
            dimension=d,
            size=n,
            budget=budget,
        )
    return (counters[0], counters[1], counters[2])
