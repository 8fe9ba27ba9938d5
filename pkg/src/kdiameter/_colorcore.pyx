# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled k-coloring backtracking kernel.

Same contract as `_colorcore_py`: DSATUR-style dynamic vertex selection,
optional fixed assignments, color symmetry breaking, and a hard node budget.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND = "cython"

MODE_FIRST = 0
MODE_ENUMERATE = 1

STATUS_OK = 0
STATUS_BUDGET = 1


cdef struct SearchState:
    int n
    int k
    int mode
    int limit
    long long budget
    long long nodes
    int symmetry
    int *indptr
    int *indices
    int *colors
    int *counts      # n * k neighbor-color counts
    int *degrees
    int *satur       # number of distinct neighbor colors per vertex


cdef int _pick(SearchState *st):
    cdef int best = -1
    cdef int v
    cdef int bs = -1, bd = -1
    for v in range(st.n):
        if st.colors[v] >= 0:
            continue
        if best == -1 or st.satur[v] > bs or (st.satur[v] == bs and
                (st.degrees[v] > bd or (st.degrees[v] == bd and v < best))):
            best = v
            bs = st.satur[v]
            bd = st.degrees[v]
    return best


cdef void _set(SearchState *st, int v, int c):
    cdef int i, w
    st.colors[v] = c
    for i in range(st.indptr[v], st.indptr[v + 1]):
        w = st.indices[i]
        if st.counts[w * st.k + c] == 0:
            st.satur[w] += 1
        st.counts[w * st.k + c] += 1


cdef void _unset(SearchState *st, int v, int c):
    cdef int i, w
    st.colors[v] = -1
    for i in range(st.indptr[v], st.indptr[v + 1]):
        w = st.indices[i]
        st.counts[w * st.k + c] -= 1
        if st.counts[w * st.k + c] == 0:
            st.satur[w] -= 1


cdef int _rec(SearchState *st, int remaining, int used, list found):
    # returns 1 to stop the whole search, -1 on budget, 0 to keep going
    cdef int v, c, top, sub
    if remaining == 0:
        found.append([st.colors[v] for v in range(st.n)])
        if st.mode == MODE_FIRST:
            return 1
        if st.limit and len(found) >= st.limit:
            return 1
        return 0
    v = _pick(st)
    top = st.k
    if st.symmetry and used + 1 < top:
        top = used + 1
    for c in range(top):
        if st.counts[v * st.k + c]:
            continue
        st.nodes += 1
        if st.nodes > st.budget:
            return -1
        _set(st, v, c)
        sub = _rec(st, remaining - 1, used if c < used else c + 1, found)
        _unset(st, v, c)
        if sub != 0:
            return sub
    return 0


def search(adj, int k, fixed=None, int mode=MODE_FIRST, int limit=0,
           long long budget=10**9):
    """Backtracking search over proper k-colorings; see `_colorcore_py.search`."""
    cdef int n = len(adj)
    cdef SearchState st
    cdef int v, w, c, i, total, remaining, used0
    cdef list found = []

    neigh = []
    total = 0
    for v in range(n):
        nb = adj[v]
        lst = []
        while nb:
            lst.append((nb & -nb).bit_length() - 1)
            nb &= nb - 1
        neigh.append(lst)
        total += len(lst)

    st.n = n
    st.k = k
    st.mode = mode
    st.limit = limit
    st.budget = budget
    st.nodes = 0
    st.symmetry = 1
    st.indptr = <int *>PyMem_Malloc((n + 1) * sizeof(int))
    st.indices = <int *>PyMem_Malloc(max(total, 1) * sizeof(int))
    st.colors = <int *>PyMem_Malloc(max(n, 1) * sizeof(int))
    st.counts = <int *>PyMem_Malloc(max(n * k, 1) * sizeof(int))
    st.degrees = <int *>PyMem_Malloc(max(n, 1) * sizeof(int))
    st.satur = <int *>PyMem_Malloc(max(n, 1) * sizeof(int))
    if (st.indptr == NULL or st.indices == NULL or st.colors == NULL or
            st.counts == NULL or st.degrees == NULL or st.satur == NULL):
        raise MemoryError
    try:
        st.indptr[0] = 0
        i = 0
        for v in range(n):
            for w in neigh[v]:
                st.indices[i] = w
                i += 1
            st.indptr[v + 1] = i
            st.degrees[v] = len(neigh[v])
            st.colors[v] = -1
            st.satur[v] = 0
        for i in range(n * k):
            st.counts[i] = 0

        if fixed is not None:
            for v in range(n):
                fc = fixed[v]
                if fc is None or fc < 0:
                    continue
                if fc >= k:
                    return STATUS_OK, (None if mode == MODE_FIRST else []), 0
                st.symmetry = 0
                st.colors[v] = fc
            for v in range(n):
                c = st.colors[v]
                if c < 0:
                    continue
                for i in range(st.indptr[v], st.indptr[v + 1]):
                    w = st.indices[i]
                    if st.colors[w] == c:
                        return STATUS_OK, (None if mode == MODE_FIRST else []), 0
                    if st.counts[w * k + c] == 0:
                        st.satur[w] += 1
                    st.counts[w * k + c] += 1

        remaining = 0
        used0 = 0
        for v in range(n):
            if st.colors[v] < 0:
                remaining += 1
            elif st.colors[v] + 1 > used0:
                used0 = st.colors[v] + 1

        status = _rec(&st, remaining, used0, found)
    finally:
        PyMem_Free(st.indptr)
        PyMem_Free(st.indices)
        PyMem_Free(st.colors)
        PyMem_Free(st.counts)
        PyMem_Free(st.degrees)
        PyMem_Free(st.satur)

    if status == -1:
        return STATUS_BUDGET, (None if mode == MODE_FIRST else found), st.nodes
    if mode == MODE_FIRST:
        return STATUS_OK, (found[0] if found else None), st.nodes
    return STATUS_OK, found, st.nodes
