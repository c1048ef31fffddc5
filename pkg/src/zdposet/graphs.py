"""Zero-divisor graphs and their invariants.

``gamma(P)`` has the non-zero zero-divisors as vertices, joined when their
only common lower bound is the least element. ``gamma_e(P)`` collapses
zero-divisors with equal annihilators into one vertex each.

Graphs are small and dense enough that adjacency is kept as one int mask
per vertex; vertices are addressed by position in ``ZdGraph.vertices``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import NoZeroDivisorsError, TooFewVerticesError
from .poset import ElementSet, IdealSet, Poset, iter_bits, zero_divisor_mask

__all__ = [
    "INF",
    "Vertex",
    "AnnClass",
    "ZdGraph",
    "ShapeReport",
    "gamma",
    "ann_classes",
    "gamma_e",
    "distance",
    "diameter",
    "girth",
    "clique_number",
    "max_clique",
    "degree",
    "neighborhood",
    "classify_shape",
    "reduce_graph",
    "to_dot",
]

INF = math.inf


@dataclass(frozen=True)
class Vertex:
    """An element vertex (one member) or a class vertex (several elements)."""

    rep: int
    members: tuple[int, ...]
    is_class: bool = False


@dataclass(frozen=True)
class AnnClass:
    representative: int
    members: ElementSet
    ann: IdealSet


class ZdGraph:
    """Simple undirected graph with mask adjacency.

    ``labels`` maps element ids to display strings; vertex names are built
    from it (``[rep]{m1,m2}`` for class vertices).
    """

    __slots__ = ("vertices", "adj", "labels", "_dist")

    def __init__(
        self,
        vertices: Sequence[Vertex],
        adj: Sequence[int],
        labels: Sequence[str] | None = None,
    ) -> None:
        n = len(vertices)
        if len(adj) != n:
            raise ValueError("one adjacency mask per vertex is required")
        for v, m in enumerate(adj):
            if m >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if m >> n:
                raise ValueError(f"vertex {v} adjacent to a missing vertex")
            for w in iter_bits(m):
                if not adj[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {v}-{w}")
        self.vertices = tuple(vertices)
        self.adj = tuple(adj)
        if labels is None:
            top = max((max(x.members) for x in self.vertices), default=-1)
            labels = [str(i) for i in range(top + 1)]
        self.labels = tuple(labels)
        self._dist: list[list[int]] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "ZdGraph":
        """Plain graph on vertices ``0..n-1`` (element vertex ``i`` is element ``i``)."""
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls([Vertex(i, (i,)) for i in range(n)], adj)

    @classmethod
    def complete(cls, n: int) -> "ZdGraph":
        return cls.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def name(self, v: int) -> str:
        vert = self.vertices[v]
        if not vert.is_class:
            return self.labels[vert.rep]
        inner = ",".join(self.labels[m] for m in vert.members)
        return f"[{self.labels[vert.rep]}]{{{inner}}}"

    def names(self) -> list[str]:
        return [self.name(v) for v in range(self.order)]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in iter_bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def distances(self) -> list[list[int]]:
        """All-pairs distances, -1 for unreachable (cached)."""
        if self._dist is None:
            self._dist = kernels.distance_matrix(self.adj)
        return self._dist

    def vertex_of(self, element: int) -> int:
        """Position of the vertex containing ``element``."""
        for v, vert in enumerate(self.vertices):
            if element in vert.members:
                return v
        raise KeyError(f"element {element} is not a vertex member")

    def same_structure(self, other: "ZdGraph") -> bool:
        return self.vertices == other.vertices and self.adj == other.adj


def _require_zero_divisors(P: Poset) -> int:
    z = zero_divisor_mask(P)
    if not z:
        raise NoZeroDivisorsError("no zero-divisors: the poset has no non-zero zero-divisors")
    return z


def gamma(P: Poset) -> ZdGraph:
    z = _require_zero_divisors(P)
    elems = list(iter_bits(z))
    pos = {x: i for i, x in enumerate(elems)}
    ann = P.ann_masks
    adj = []
    for x in elems:
        m = 0
        for y in iter_bits(ann[x] & z):
            m |= 1 << pos[y]
        adj.append(m)
    return ZdGraph([Vertex(x, (x,)) for x in elems], adj, P.labels)


def ann_classes(P: Poset) -> list[AnnClass]:
    """Zero-divisors grouped by annihilator, ordered by least member."""
    z = _require_zero_divisors(P)
    groups: dict[int, int] = {}
    ann = P.ann_masks
    for x in iter_bits(z):
        groups[ann[x]] = groups.get(ann[x], 0) | (1 << x)
    out = [
        AnnClass((members & -members).bit_length() - 1, ElementSet(members, P.n), IdealSet(a, P.n))
        for a, members in groups.items()
    ]
    out.sort(key=lambda c: c.representative)
    return out


def gamma_e(P: Poset, classes: list[AnnClass] | None = None) -> ZdGraph:
    if classes is None:
        classes = ann_classes(P)
    ann = P.ann_masks
    reps = [c.representative for c in classes]
    adj = []
    for x in reps:
        m = 0
        for j, y in enumerate(reps):
            if ann[x] >> y & 1:
                m |= 1 << j
        adj.append(m)
    verts = [Vertex(c.representative, c.members.members(), True) for c in classes]
    return ZdGraph(verts, adj, P.labels)


def distance(G: ZdGraph, u: int, v: int) -> float:
    d = G.distances()[u][v]
    return INF if d < 0 else d


def diameter(G: ZdGraph) -> float:
    if G.order < 2:
        raise TooFewVerticesError("diameter needs at least two vertices")
    best = 0
    for row in G.distances():
        for d in row:
            if d < 0:
                return INF
            if d > best:
                best = d
    return best


def girth(G: ZdGraph) -> float:
    g = kernels.girth(G.adj)
    return INF if g == 0 else g


def max_clique(G: ZdGraph) -> tuple[int, ...]:
    """Vertices of one maximum clique."""
    return tuple(iter_bits(kernels.max_clique(G.adj)))


def clique_number(G: ZdGraph) -> int:
    return bin(kernels.max_clique(G.adj)).count("1")


def degree(G: ZdGraph, v: int) -> int:
    return bin(G.adj[v]).count("1")


def neighborhood(G: ZdGraph, v: int) -> frozenset[int]:
    return frozenset(iter_bits(G.adj[v]))


@dataclass(frozen=True)
class ShapeReport:
    is_complete: bool
    is_star: bool
    is_regular: bool
    is_cycle: bool
    complete_multipartite: tuple[tuple[int, ...], ...] | None

    def to_dict(self) -> dict:
        return {
            "complete": self.is_complete,
            "star": self.is_star,
            "regular": self.is_regular,
            "cycle": self.is_cycle,
            "complete_multipartite": (
                None if self.complete_multipartite is None
                else [list(p) for p in self.complete_multipartite]
            ),
        }


def _multipartite_parts(G: ZdGraph) -> tuple[tuple[int, ...], ...] | None:
    n = G.order
    full = (1 << n) - 1
    comp = [full & ~G.adj[v] & ~(1 << v) for v in range(n)]
    unseen = full
    parts = []
    while unseen:
        start = unseen & -unseen
        part = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= comp[v]
            frontier = nxt & ~part
            part |= frontier
        unseen &= ~part
        parts.append(part)
    if len(parts) < 2:
        return None
    for part in parts:
        for v in iter_bits(part):
            # independent inside the part, joined to everything outside it
            if G.adj[v] != full & ~part:
                return None
    return tuple(tuple(iter_bits(p)) for p in parts)


def classify_shape(G: ZdGraph) -> ShapeReport:
    n = G.order
    degs = [degree(G, v) for v in range(n)]
    complete = all(d == n - 1 for d in degs)
    regular = len(set(degs)) <= 1
    star = False
    if n >= 2 and G.edge_count() == n - 1:
        star = any(d == n - 1 for d in degs) and all(d in (1, n - 1) for d in degs)
    cycle = n >= 3 and all(d == 2 for d in degs) and diameter(G) != INF
    return ShapeReport(complete, star, regular, cycle, _multipartite_parts(G))


def reduce_graph(G: ZdGraph) -> ZdGraph:
    """Merge vertices with equal neighbourhoods.

    Every vertex of the result is a class vertex whose members are the
    union of the merged vertices' members.
    """
    groups: dict[int, list[int]] = {}
    for v, m in enumerate(G.adj):
        groups.setdefault(m, []).append(v)
    blocks = []
    for vs in groups.values():
        members = sorted(m for v in vs for m in G.vertices[v].members)
        blocks.append((members[0], tuple(members), vs[0]))
    blocks.sort()
    pos = {}
    for i, (_, _, v0) in enumerate(blocks):
        for v in groups[G.adj[v0]]:
            pos[v] = i
    adj = []
    for _, _, v0 in blocks:
        m = 0
        for w in iter_bits(G.adj[v0]):
            m |= 1 << pos[w]
        adj.append(m)
    verts = [Vertex(rep, members, True) for rep, members, _ in blocks]
    return ZdGraph(verts, adj, G.labels)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(G: ZdGraph, name: str = "G") -> str:
    lines = [f"graph {_dot_quote(name)} {{"]
    for v in range(G.order):
        lines.append(f"  v{v} [label={_dot_quote(G.name(v))}];")
    for u, v in G.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
