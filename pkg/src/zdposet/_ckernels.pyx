# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over 64-bit masks.

Same contract as ``zdposet._pykernels``; callers guarantee at most 64
elements or vertices (``zdposet.kernels`` routes larger inputs to the
pure-Python versions).
"""

from libc.stdint cimport uint64_t

ctypedef uint64_t mask_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

MAX_BITS = 64


cdef inline int lowbit(mask_t m) nogil:
    return __builtin_ctzll(m)


cdef inline int popcount(mask_t m) nogil:
    return __builtin_popcountll(m)


cdef inline mask_t bit(int i) nogil:
    return (<mask_t>1) << i


def transitive_closure(down):
    cdef int n = len(down)
    cdef mask_t out[64]
    cdef int j, k
    cdef mask_t kbit, dk
    for j in range(n):
        out[j] = (<mask_t>down[j]) | bit(j)
    for k in range(n):
        kbit = bit(k)
        dk = out[k]
        for j in range(n):
            if out[j] & kbit:
                out[j] |= dk
    return [int(out[j]) for j in range(n)]


def annihilator_masks(down):
    cdef int n = len(down)
    cdef mask_t d[64]
    cdef mask_t m, dx
    cdef int x, y
    for x in range(n):
        d[x] = <mask_t>down[x]
    res = []
    for x in range(n):
        dx = d[x]
        m = 0
        for y in range(n):
            if (dx & d[y]) == 1:
                m |= bit(y)
        res.append(int(m))
    return res


def distance_matrix(adj):
    cdef int n = len(adj)
    cdef mask_t a[64]
    cdef int dist[64]
    cdef mask_t seen, frontier, nxt, f
    cdef int s, d, u, v
    for u in range(n):
        a[u] = <mask_t>adj[u]
    rows = []
    for s in range(n):
        for v in range(n):
            dist[v] = -1
        dist[s] = 0
        seen = bit(s)
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                u = lowbit(f)
                f &= f - 1
                nxt |= a[u]
            nxt &= ~seen
            seen |= nxt
            f = nxt
            while f:
                v = lowbit(f)
                f &= f - 1
                dist[v] = d
            frontier = nxt
        rows.append([dist[v] for v in range(n)])
    return rows


def girth(adj):
    cdef int n = len(adj)
    cdef mask_t a[64]
    cdef int dist[64]
    cdef int parent[64]
    cdef int queue[64]
    cdef int head, tail, s, u, w, cyc, best = 0
    cdef mask_t f
    for u in range(n):
        a[u] = <mask_t>adj[u]
    for s in range(n):
        for u in range(n):
            dist[u] = -1
            parent[u] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            if best and 2 * dist[u] + 1 >= best:
                break
            f = a[u]
            while f:
                w = lowbit(f)
                f &= f - 1
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif w != parent[u]:
                    cyc = dist[u] + dist[w] + 1
                    if best == 0 or cyc < best:
                        best = cyc
    return best


cdef struct CliqueState:
    int n
    mask_t *adj
    int *order
    mask_t best
    int best_size


cdef void expand(CliqueState *st, mask_t clique, int size, mask_t cand) nogil:
    cdef int verts[64]
    cdef int colours[64]
    cdef int count = 0
    cdef int colour = 0
    cdef int i, v
    cdef mask_t uncoloured = cand
    cdef mask_t avail, newc
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            # first vertex of avail in degeneracy order
            for i in range(st.n):
                v = st.order[i]
                if avail & bit(v):
                    break
            verts[count] = v
            colours[count] = colour
            count += 1
            uncoloured &= ~bit(v)
            avail &= ~bit(v) & ~st.adj[v]
    for i in range(count - 1, -1, -1):
        if size + colours[i] <= st.best_size:
            return
        v = verts[i]
        newc = cand & st.adj[v]
        if newc:
            expand(st, clique | bit(v), size + 1, newc)
        elif size + 1 > st.best_size:
            st.best = clique | bit(v)
            st.best_size = size + 1
        cand &= ~bit(v)


def max_clique(adj):
    cdef int n = len(adj)
    if n == 0:
        return 0
    cdef mask_t a[64]
    cdef int order[64]
    cdef mask_t remaining
    cdef int i, u, v, deg, bestdeg, k
    cdef CliqueState st
    for u in range(n):
        a[u] = <mask_t>adj[u]
    remaining = (bit(n - 1) - 1) | bit(n - 1)
    k = n - 1
    while remaining:
        bestdeg = 65
        v = -1
        for u in range(n):
            if remaining & bit(u):
                deg = popcount(a[u] & remaining)
                if deg < bestdeg:
                    bestdeg = deg
                    v = u
        order[k] = v
        k -= 1
        remaining &= ~bit(v)
    st.n = n
    st.adj = a
    st.order = order
    st.best = bit(order[0])
    st.best_size = 1
    expand(&st, 0, 0, (bit(n - 1) - 1) | bit(n - 1))
    return int(st.best)


cdef void grow(int m, int k, mask_t *down, mask_t *up, list result):
    cdef mask_t full = bit(k) - 1
    cdef mask_t dmask, above_all, rest, sub, f, newbit
    cdef mask_t nd[64]
    cdef mask_t nu[64]
    cdef int i, j
    cdef bint ok
    if k == m:
        result.append(tuple([int(down[i]) for i in range(m)]))
        return
    newbit = bit(k)
    dmask = 0
    while True:
        ok = True
        above_all = full
        f = dmask
        while f:
            i = lowbit(f)
            f &= f - 1
            if down[i] & ~dmask:
                ok = False
                break
            above_all &= up[i]
        if ok:
            rest = full & ~dmask & above_all
            sub = rest
            while True:
                ok = True
                f = sub
                while f:
                    j = lowbit(f)
                    f &= f - 1
                    if up[j] & ~sub:
                        ok = False
                        break
                if ok:
                    for i in range(k):
                        nd[i] = down[i]
                        nu[i] = up[i]
                    f = sub
                    while f:
                        j = lowbit(f)
                        f &= f - 1
                        nd[j] |= dmask | newbit
                    f = dmask
                    while f:
                        i = lowbit(f)
                        f &= f - 1
                        nu[i] |= sub | newbit
                    nd[k] = dmask | newbit
                    nu[k] = sub | newbit
                    grow(m, k + 1, nd, nu, result)
                if sub == 0:
                    break
                sub = (sub - 1) & rest
        if dmask == full:
            break
        dmask += 1


def poset_down_masks(int m):
    cdef mask_t down[64]
    cdef mask_t up[64]
    result = []
    grow(m, 0, down, up, result)
    return result
