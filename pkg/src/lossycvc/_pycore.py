"""Pure-Python bitmask kernels. Reference twin of ``_core.pyx``.

Vertices are indices ``0..n-1``; ``adj[i]`` is the neighbor bitmask of ``i``.
"""

from itertools import combinations


def _is_cvc(adj, n, t):
    rest = ~t
    for i in range(n):
        if not (t >> i) & 1 and adj[i] & rest:
            return False
    if t == 0:
        return True
    reach = t & -t
    frontier = reach
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nb = adj[low.bit_length() - 1] & t & ~reach
        reach |= nb
        frontier |= nb
    return reach == t


def cvc_search(adj, required, forbidden):
    """Smallest connected vertex cover containing ``required`` and avoiding ``forbidden``.

    Among minimum covers the lexicographically smallest index tuple wins.
    Returns the cover bitmask, or -1 when no cover exists.
    """
    n = len(adj)
    free = [i for i in range(n) if not ((required | forbidden) >> i) & 1]
    for size in range(len(free) + 1):
        for combo in combinations(free, size):
            t = required
            for i in combo:
                t |= 1 << i
            if _is_cvc(adj, n, t):
                return t
    return -1


def is_cvc_mask(adj, t):
    return _is_cvc(adj, len(adj), t)


def _elim_degree(adj, rest, v):
    """Vertices outside ``rest | {v}`` reachable from ``v`` through ``rest``."""
    reach = 1 << v
    frontier = reach
    nbrs = 0
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        a = adj[low.bit_length() - 1]
        nbrs |= a
        nb = a & rest & ~reach
        reach |= nb
        frontier |= nb
    return bin(nbrs & ~rest & ~(1 << v)).count("1")


def treewidth_order(adj, cap):
    """Exact treewidth by dynamic programming over vertex subsets.

    Returns ``(width, elimination_order)`` when the treewidth is at most
    ``cap``, else ``None``.
    """
    n = len(adj)
    if n == 0:
        return 0, []
    full = (1 << n) - 1
    over = cap + 1
    tw = [0] * (full + 1)
    choice = [0] * (full + 1)
    for mask in range(1, full + 1):
        best = over
        pick = -1
        m = mask
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            rest = mask ^ low
            a = tw[rest]
            if a >= best:
                continue
            q = _elim_degree(adj, rest, v)
            if q >= best:
                continue
            best = a if a > q else q
            pick = v
        tw[mask] = best
        choice[mask] = pick
    if tw[full] > cap:
        return None
    order = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()
    return tw[full], order
