"""Pure-Python versions of the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same
signature and the same results. Sets are Python ints used as bitmasks;
graphs are sequences of adjacency masks.
"""

from __future__ import annotations

from typing import Sequence

__all__ = [
    "transitive_closure",
    "annihilator_masks",
    "distance_matrix",
    "girth",
    "max_clique",
    "poset_down_masks",
]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def transitive_closure(down: Sequence[int]) -> list[int]:
    """Warshall closure of a relation stored as per-element down masks.

    ``down[j]`` has bit ``i`` set when ``i <= j`` is a generating pair.
    Reflexivity is added.
    """
    n = len(down)
    out = [m | (1 << j) for j, m in enumerate(down)]
    for k in range(n):
        kbit = 1 << k
        dk = out[k]
        for j in range(n):
            if out[j] & kbit:
                out[j] |= dk
    return out


def annihilator_masks(down: Sequence[int]) -> list[int]:
    # element 0 is the least element, so L(x, y) = {0} iff the meet mask is 1
    n = len(down)
    out = []
    for x in range(n):
        dx = down[x]
        m = 0
        for y in range(n):
            if dx & down[y] == 1:
                m |= 1 << y
        out.append(m)
    return out


def distance_matrix(adj: Sequence[int]) -> list[list[int]]:
    """All-pairs BFS distances; -1 marks an unreachable pair."""
    n = len(adj)
    rows = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            nxt &= ~seen
            seen |= nxt
            for v in _bits(nxt):
                dist[v] = d
            frontier = nxt
        rows.append(dist)
    return rows


def girth(adj: Sequence[int]) -> int:
    """Shortest cycle length, or 0 when the graph is acyclic."""
    n = len(adj)
    best = 0
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best and 2 * dist[u] + 1 >= best:
                break
            for w in _bits(adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cyc = dist[u] + dist[w] + 1
                    if not best or cyc < best:
                        best = cyc
    return best


def _degeneracy_order(adj: Sequence[int]) -> list[int]:
    n = len(adj)
    remaining = (1 << n) - 1
    order = []
    while remaining:
        v = min(_bits(remaining), key=lambda u: bin(adj[u] & remaining).count("1"))
        order.append(v)
        remaining &= ~(1 << v)
    order.reverse()
    return order


def max_clique(adj: Sequence[int]) -> int:
    """Exact maximum clique as a vertex mask.

    Branch and bound over candidate sets; the bound is a greedy colouring
    of the candidates.
    """
    n = len(adj)
    if n == 0:
        return 0
    order = _degeneracy_order(adj)
    best = [1 << order[0], 1]

    def colour_bound(cand: int) -> list[tuple[int, int]]:
        # greedy colouring: returns (vertex, colour) with colours non-decreasing
        out = []
        colour = 0
        uncoloured = cand
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                v = next(u for u in order if avail >> u & 1)
                out.append((v, colour))
                uncoloured &= ~(1 << v)
                avail &= ~(1 << v) & ~adj[v]
        return out

    def expand(clique: int, size: int, cand: int) -> None:
        coloured = colour_bound(cand)
        for v, c in reversed(coloured):
            if size + c <= best[1]:
                return
            newc = cand & adj[v]
            if newc:
                expand(clique | (1 << v), size + 1, newc)
            elif size + 1 > best[1]:
                best[0] = clique | (1 << v)
                best[1] = size + 1
            cand &= ~(1 << v)

    expand(0, 0, (1 << n) - 1)
    return best[0]


def poset_down_masks(m: int) -> list[tuple[int, ...]]:
    """All partial orders on ``m`` labelled points, as down-mask tuples.

    Points are added one at a time. A new point ``k`` is placed by choosing a
    down-closed set D and an up-closed set U of the points already placed,
    disjoint, with every member of D below every member of U. Each poset
    on ``k + 1`` points arises from exactly one such choice.
    """
    if m == 0:
        return [()]
    result: list[tuple[int, ...]] = []

    def grow(down: list[int], up: list[int], k: int) -> None:
        if k == m:
            result.append(tuple(down))
            return
        full = (1 << k) - 1
        for dmask in range(full + 1):
            # D down-closed: every member's down set inside D
            ok = True
            above_all = full
            for i in _bits(dmask):
                if down[i] & ~dmask:
                    ok = False
                    break
                above_all &= up[i]
            if not ok:
                continue
            rest = full & ~dmask & above_all
            # U ranges over up-closed subsets of the points above all of D
            sub = rest
            while True:
                good = True
                for j in _bits(sub):
                    if up[j] & ~sub:
                        good = False
                        break
                if good:
                    newbit = 1 << k
                    nd = down[:]
                    nu = up[:]
                    for j in _bits(sub):
                        nd[j] |= dmask | newbit
                    for i in _bits(dmask):
                        nu[i] |= sub | newbit
                    nd.append(dmask | newbit)
                    nu.append(sub | newbit)
                    grow(nd, nu, k + 1)
                if sub == 0:
                    break
                sub = (sub - 1) & rest
        return

    grow([], [], 0)
    return result
