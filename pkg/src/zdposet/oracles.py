"""Exhaustive graph oracles.

These deliberately share nothing with the kernels: cliques by trying every
vertex subset, diameters by Floyd-Warshall, girth by enumerating simple
cycles. Use only on small graphs (``config.graph_cap()`` vertices).
"""

from __future__ import annotations

from itertools import combinations

from .config import graph_cap
from .errors import OracleCapExceeded
from .graphs import INF, ZdGraph


def _guard(G: ZdGraph, cap: int | None) -> list[set[int]]:
    cap = graph_cap() if cap is None else cap
    if G.order > cap:
        raise OracleCapExceeded(f"{G.order} vertices exceeds graph oracle cap {cap}")
    return [{w for w in range(G.order) if G.adj[v] >> w & 1} for v in range(G.order)]


def clique_number_bruteforce(G: ZdGraph, cap: int | None = None) -> int:
    nbrs = _guard(G, cap)
    for k in range(G.order, 0, -1):
        for combo in combinations(range(G.order), k):
            if all(b in nbrs[a] for a, b in combinations(combo, 2)):
                return k
    return 0


def distances_bruteforce(G: ZdGraph, cap: int | None = None) -> list[list[float]]:
    nbrs = _guard(G, cap)
    n = G.order
    d = [[0 if i == j else (1 if j in nbrs[i] else INF) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def diameter_bruteforce(G: ZdGraph, cap: int | None = None) -> float:
    d = distances_bruteforce(G, cap)
    return max(max(row) for row in d)


def girth_bruteforce(G: ZdGraph, cap: int | None = None) -> float:
    """Length of the shortest simple cycle, found by extending simple paths."""
    nbrs = _guard(G, cap)
    best = INF

    def walk(start: int, path: list[int]) -> None:
        nonlocal best
        if len(path) >= best:
            return
        last = path[-1]
        for w in nbrs[last]:
            if w == start and len(path) >= 3:
                best = min(best, len(path))
            elif w > start and w not in path:
                path.append(w)
                walk(start, path)
                path.pop()

    # each cycle is found from its smallest vertex
    for s in range(G.order):
        walk(s, [s])
    return best
