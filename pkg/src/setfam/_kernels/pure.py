"""Pure-Python search kernels.

Graph vertices are indices 0..nv-1 and adj[v] is the neighborhood of v
as a bitmask over vertex indices (no self loops).  These mirror the
compiled kernels in _ckern exactly; keep the two in sync.
"""

from __future__ import annotations


def maximal_cliques(adj, nv: int) -> list[int]:
    """All maximal cliques as vertex bitmasks (Bron-Kerbosch, pivoting)."""
    out: list[int] = []
    if nv == 0:
        return out

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        # pivot u maximizing |P & N(u)| over P | X
        m = p | x
        best_u = -1
        best = -1
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            c = (p & adj[u]).bit_count()
            if c > best:
                best = c
                best_u = u
        ext = p & ~adj[best_u]
        while ext:
            b = ext & -ext
            ext ^= b
            av = adj[b.bit_length() - 1]
            expand(r | b, p & av, x & av)
            p ^= b
            x |= b

    expand(0, (1 << nv) - 1, 0)
    return out


def max_clique_size(adj, nv: int, cand: int, lb: int = 0) -> int:
    """max(lb, size of the largest clique induced on the cand vertex set).

    lb must be the size of a clique known to exist (it seeds the pruning
    bound); the empty graph has clique size 0.
    """
    best = lb if lb > 0 else 0

    def expand(p: int, size: int):
        nonlocal best
        # greedy coloring: order vertices by color class, colors ascending
        order: list[int] = []
        colors: list[int] = []
        un = p
        c = 0
        while un:
            c += 1
            avail = un
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                order.append(v)
                colors.append(c)
                un ^= b
                avail &= ~(adj[v] | b)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best:
                return
            v = order[i]
            np_ = p & adj[v]
            if np_:
                expand(np_, size + 1)
            elif size + 1 > best:
                best = size + 1
            p ^= 1 << v

    if cand:
        expand(cand, 0)
    return best


def canonical_min(n: int, members, seed=None):
    """Lexicographically least relabeling of a family under permutations of [n].

    members are element bitmasks; returns (encode, achieved) where encode
    is the sorted tuple of relabeled masks.  With seed (a candidate
    encode) the search starts from that incumbent: if some permutation
    attains a value <= seed, achieved is True and encode is the true
    minimum; otherwise encode == seed and achieved is False (no
    relabeling reaches seed, rerun without a seed for the true minimum).

    Branch and bound: new labels 1, 2, .. are assigned to old elements in
    order, support elements first (a minimal relabeling never puts an
    unused element below a used one).  Per-member lower-bound masks prune
    against the incumbent; ties are explored only until one witness
    permutation confirms the incumbent is attainable.
    """
    ms = list(members)
    m = len(ms)
    if m == 0:
        return (), True
    support = 0
    for v in ms:
        support |= v
    sup = []
    s = support
    while s:
        b = s & -s
        s ^= b
        sup.append(b.bit_length() - 1)

    best = None if seed is None else list(seed)
    if best is not None and len(best) != m:
        raise ValueError("seed length must match the family size")
    achieved = False
    # member indices containing each support element
    cols = {e: [i for i in range(m) if ms[i] >> e & 1] for e in sup}

    def rec(t, j, p, unassigned, low):
        # low is this node's sorted lower-bound list (computed by the parent)
        nonlocal best, achieved
        if not unassigned:
            if best is None or low < best:
                best = low
                achieved = True
            elif low == best:
                achieved = True
            return
        bitp = 1 << p
        shift = p + 1
        kids = []
        for e in unassigned:
            t2 = t.copy()
            j2 = j.copy()
            for i in cols[e]:
                t2[i] |= bitp
                j2[i] -= 1
            key = [t2[i] | (((1 << j2[i]) - 1) << shift) for i in range(m)]
            key.sort()
            kids.append((key, e, t2, j2))
        kids.sort(key=lambda kv: kv[0])
        for key, e, t2, j2 in kids:
            if best is not None:
                if achieved:
                    if key >= best:
                        break  # keys ascend; the rest are dominated too
                elif key > best:
                    break
            rec(t2, j2, shift, [u for u in unassigned if u != e], key)

    t0 = [0] * m
    j0 = [v.bit_count() for v in ms]
    low0 = sorted((1 << j) - 1 for j in j0)
    rec(t0, j0, 0, sup, low0)
    return (None, False) if best is None else (tuple(best), achieved)
