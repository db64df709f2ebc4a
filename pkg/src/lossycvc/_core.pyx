# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; same contracts as ``_pycore``."""

from libc.stdint cimport uint64_t, uint8_t, int8_t
from libc.stdlib cimport malloc, free


cdef inline int _lowbit_index(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef bint _is_cvc(const uint64_t* adj, int n, uint64_t t) nogil:
    cdef uint64_t rest = ~t
    cdef uint64_t out, low, reach, frontier, nb
    cdef int i
    for i in range(n):
        if not ((t >> i) & 1) and (adj[i] & rest):
            return False
    if t == 0:
        return True
    reach = t & (~t + 1)
    frontier = reach
    while frontier:
        low = frontier & (~frontier + 1)
        frontier ^= low
        nb = adj[_lowbit_index(low)] & t & ~reach
        reach |= nb
        frontier |= nb
    return reach == t


cdef uint64_t* _load(list adj, int n) except NULL:
    cdef uint64_t* a = <uint64_t*> malloc(max(n, 1) * sizeof(uint64_t))
    if a == NULL:
        raise MemoryError()
    for i in range(n):
        a[i] = <uint64_t> adj[i]
    return a


def cvc_search(adj, required, forbidden):
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("at most 64 vertices supported")
    cdef uint64_t* a = _load(list(adj), n)
    cdef uint64_t req = <uint64_t> required
    cdef uint64_t forb = <uint64_t> forbidden
    cdef int free_idx[64]
    cdef int idx[64]
    cdef int nf = 0, size, i, j
    cdef uint64_t t
    cdef long long found = -1
    try:
        for i in range(n):
            if not (((req | forb) >> i) & 1):
                free_idx[nf] = i
                nf += 1
        with nogil:
            for size in range(nf + 1):
                for i in range(size):
                    idx[i] = i
                while True:
                    t = req
                    for i in range(size):
                        t |= (<uint64_t> 1) << free_idx[idx[i]]
                    if _is_cvc(a, n, t):
                        found = <long long> t
                        break
                    # next combination in lexicographic order
                    i = size - 1
                    while i >= 0 and idx[i] == nf - size + i:
                        i -= 1
                    if i < 0:
                        break
                    idx[i] += 1
                    for j in range(i + 1, size):
                        idx[j] = idx[j - 1] + 1
                if found >= 0:
                    break
    finally:
        free(a)
    return found


def is_cvc_mask(adj, t):
    cdef int n = len(adj)
    cdef uint64_t* a = _load(list(adj), n)
    try:
        return bool(_is_cvc(a, n, <uint64_t> t))
    finally:
        free(a)


cdef int _elim_degree(const uint64_t* adj, uint64_t rest, int v) nogil:
    cdef uint64_t reach = (<uint64_t> 1) << v
    cdef uint64_t frontier = reach
    cdef uint64_t nbrs = 0, low, a, nb
    while frontier:
        low = frontier & (~frontier + 1)
        frontier ^= low
        a = adj[_lowbit_index(low)]
        nbrs |= a
        nb = a & rest & ~reach
        reach |= nb
        frontier |= nb
    return __builtin_popcountll(nbrs & ~rest & ~((<uint64_t> 1) << v))


def treewidth_order(adj, int cap):
    cdef int n = len(adj)
    if n == 0:
        return 0, []
    if n > 30:
        raise ValueError("subset DP limited to 30 vertices")
    cdef uint64_t full = ((<uint64_t> 1) << n) - 1
    cdef uint64_t* a = _load(list(adj), n)
    cdef uint8_t* tw = <uint8_t*> malloc((full + 1) * sizeof(uint8_t))
    cdef int8_t* choice = <int8_t*> malloc((full + 1) * sizeof(int8_t))
    cdef uint64_t mask, m, low, rest
    cdef int best, pick, v, q, av, over = cap + 1
    if tw == NULL or choice == NULL:
        free(a); free(tw); free(choice)
        raise MemoryError()
    try:
        tw[0] = 0
        choice[0] = -1
        with nogil:
            for mask in range(1, full + 1):
                best = over
                pick = -1
                m = mask
                while m:
                    low = m & (~m + 1)
                    m ^= low
                    v = _lowbit_index(low)
                    rest = mask ^ low
                    av = tw[rest]
                    if av >= best:
                        continue
                    q = _elim_degree(a, rest, v)
                    if q >= best:
                        continue
                    best = av if av > q else q
                    pick = v
                tw[mask] = <uint8_t> best
                choice[mask] = <int8_t> pick
        if tw[full] > cap:
            return None
        order = []
        mask = full
        while mask:
            v = choice[mask]
            order.append(v)
            mask ^= (<uint64_t> 1) << v
        order.reverse()
        return int(tw[full]), order
    finally:
        free(a)
        free(tw)
        free(choice)
