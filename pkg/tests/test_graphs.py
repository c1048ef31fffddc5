from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import graphs, posets
from naive import NaivePoset, bfs_dist, max_clique_size
from zdposet import (
    INF,
    ZdGraph,
    ann_classes,
    classify_shape,
    clique_number,
    degree,
    diameter,
    distance,
    gamma,
    gamma_e,
    girth,
    named_example,
    neighborhood,
    reduce_graph,
    to_dot,
)
from zdposet.errors import NoZeroDivisorsError, TooFewVerticesError
from zdposet.graphs import max_clique
from zdposet.oracles import clique_number_bruteforce, diameter_bruteforce, girth_bruteforce
from zdposet.poset import zero_divisor_mask


def star(k: int) -> ZdGraph:
    return ZdGraph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def cycle(n: int) -> ZdGraph:
    return ZdGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def vid(G: ZdGraph, P, label: str) -> int:
    return G.vertex_of(P.index(label))


class TestGamma:
    def test_antichain_is_triangle(self, antichain3):
        G = gamma(antichain3)
        assert G.order == 3 and G.edge_count() == 3

    def test_p0_truncation_is_star(self, p0_3):
        G = gamma(p0_3)
        assert G.order == 4
        shape = classify_shape(G)
        assert shape.is_star
        centre = vid(G, p0_3, "{1}")
        assert degree(G, centre) == 3

    def test_chain_rejected(self, chain3):
        with pytest.raises(NoZeroDivisorsError):
            gamma(chain3)
        with pytest.raises(NoZeroDivisorsError):
            gamma_e(chain3)
        with pytest.raises(NoZeroDivisorsError):
            ann_classes(chain3)


class TestClasses:
    def test_p0(self, p0_3):
        got = [sorted(p0_3.labels_of(c.members)) for c in ann_classes(p0_3)]
        assert got == [["{1}"], ["{2,3}", "{2,4}", "{2}"]]

    def test_antichain_singletons(self):
        P = named_example("antichain", 5)
        assert [len(c.members) for c in ann_classes(P)] == [1] * 5

    def test_deg_counterexample_all_singletons(self, deg_poset):
        cls = ann_classes(deg_poset)
        assert len(cls) == 10
        assert all(len(c.members) == 1 for c in cls)

    def test_class_fields(self, powerset3):
        for c in ann_classes(powerset3):
            assert c.representative in c.members
            assert c.representative == min(c.members)
            for x in c.members:
                assert powerset3.ann_masks[x] == c.ann.mask


class TestGammaE:
    def test_p0_two_vertices(self, p0_3):
        GE = gamma_e(p0_3)
        assert GE.order == 2 and GE.edge_count() == 1

    def test_powerset_isomorphic_to_gamma(self, powerset3):
        G, GE = gamma(powerset3), gamma_e(powerset3)
        assert GE.order == 6
        assert G.adj == GE.adj

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_antichain_complete(self, n):
        GE = gamma_e(named_example("antichain", n))
        assert GE.order == n and classify_shape(GE).is_complete

    def test_degrees_deg_counterexample(self, deg_poset):
        GE = gamma_e(deg_poset)
        assert degree(GE, vid(GE, deg_poset, "{3}")) == 6
        assert degree(GE, vid(GE, deg_poset, "{1,2}")) == 7


class TestMetrics:
    def test_distance(self, powerset3):
        G = gamma(powerset3)
        a, b = vid(G, powerset3, "{1,2}"), vid(G, powerset3, "{1,3}")
        assert distance(G, a, a) == 0
        assert distance(G, a, b) == 3
        K2 = ZdGraph.complete(2)
        assert distance(K2, 0, 1) == 1
        assert distance(ZdGraph.from_edges(2, []), 0, 1) == INF

    def test_diameter(self, powerset3):
        for n in (2, 3, 6):
            assert diameter(ZdGraph.complete(n)) == 1
        assert diameter(gamma(powerset3)) == 3
        assert diameter(gamma_e(powerset3)) == 3
        with pytest.raises(TooFewVerticesError):
            diameter(ZdGraph.complete(1))

    def test_girth(self, p0_3):
        assert girth(ZdGraph.complete(3)) == 3
        assert girth(gamma(p0_3)) == INF
        B = named_example("bipartite_example")
        assert girth(gamma(B)) == 4
        assert girth(cycle(7)) == 7

    def test_clique_number(self, deg_poset, powerset3):
        for n in (1, 2, 5):
            assert clique_number(ZdGraph.complete(n)) == n
        assert clique_number(gamma(deg_poset)) == 6
        assert clique_number(gamma(powerset3)) == 3
        G = gamma(powerset3)
        singles = {vid(G, powerset3, s) for s in ("{1}", "{2}", "{3}")}
        assert set(max_clique(G)) == singles

    def test_degree_and_neighborhood(self):
        S = star(3)
        assert degree(S, 1) == 1
        assert neighborhood(S, 1) == {0}
        K = ZdGraph.complete(4)
        assert [degree(K, v) for v in range(4)] == [3, 3, 3, 3]


class TestShape:
    def test_triangle(self):
        s = classify_shape(ZdGraph.complete(3))
        assert s.is_complete and s.is_cycle and s.is_regular and not s.is_star
        assert s.complete_multipartite == ((0,), (1,), (2,))

    def test_star(self):
        s = classify_shape(star(3))
        assert s.is_star and not s.is_complete
        assert sorted(map(len, s.complete_multipartite)) == [1, 3]

    def test_k2_counts_as_star(self):
        assert classify_shape(ZdGraph.complete(2)).is_star

    def test_powerset_class_graph(self, powerset3):
        s = classify_shape(gamma_e(powerset3))
        assert not (s.is_complete or s.is_star or s.is_cycle or s.is_regular)
        assert s.complete_multipartite is None

    def test_multipartite_needs_independent_parts(self):
        # path 0-1-2: complement has 0~2 in one component; 0 and 2 are not adjacent
        s = classify_shape(ZdGraph.from_edges(3, [(0, 1), (1, 2)]))
        assert s.complete_multipartite == ((0, 2), (1,))
        # complement of P4 is P4: one complement component, so not multipartite
        s = classify_shape(ZdGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
        assert s.complete_multipartite is None

    def test_cycle(self):
        assert classify_shape(cycle(5)).is_cycle
        two_triangles = ZdGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert not classify_shape(two_triangles).is_cycle


class TestReduce:
    def test_p0(self, p0_3):
        R = reduce_graph(gamma(p0_3))
        assert R.order == 2 and R.edge_count() == 1

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_complete_unchanged(self, n):
        K = ZdGraph.complete(n)
        assert reduce_graph(K).adj == K.adj

    @settings(max_examples=120, deadline=None)
    @given(posets(max_size=9))
    def test_gamma_reduces_to_class_graph(self, P):
        if not zero_divisor_mask(P):
            return
        GE = gamma_e(P)
        assert reduce_graph(gamma(P)).same_structure(GE)
        assert reduce_graph(GE).order == GE.order


class TestDot:
    def test_deterministic_and_wellformed(self, p0_3):
        text = to_dot(gamma_e(p0_3), "gammaE")
        assert text == to_dot(gamma_e(p0_3), "gammaE")
        assert text.startswith('graph "gammaE" {') and text.rstrip().endswith("}")
        assert text.count(" -- ") == 1
        assert '[label="[{2}]{{2},{2,3},{2,4}}"]' in text

    def test_edges_in_lexicographic_order(self):
        G = ZdGraph.from_edges(4, [(2, 3), (0, 3), (0, 1)])
        edges = [line.strip() for line in to_dot(G).splitlines() if "--" in line]
        assert edges == ["v0 -- v1;", "v0 -- v3;", "v2 -- v3;"]


class TestAgainstOracles:
    @settings(max_examples=200, deadline=None)
    @given(graphs(max_size=10))
    def test_invariants_match_bruteforce(self, G):
        assert clique_number(G) == clique_number_bruteforce(G)
        assert girth(G) == girth_bruteforce(G)
        if G.order >= 2:
            assert diameter(G) == diameter_bruteforce(G)

    @settings(max_examples=60, deadline=None)
    @given(posets(min_size=3, max_size=7))
    def test_graphs_match_reference_model(self, P):
        if not zero_divisor_mask(P):
            return
        ref = NaivePoset(range(P.n), P.leq, 0)
        verts, edges = ref.gamma()
        G = gamma(P)
        assert sorted(v.rep for v in G.vertices) == sorted(verts)
        assert {frozenset((G.vertices[u].rep, G.vertices[v].rep)) for u, v in G.edges()} == edges
        assert clique_number(G) == max_clique_size(verts, edges)
        for u in range(G.order):
            for v in range(G.order):
                assert distance(G, u, v) == bfs_dist(verts, edges, G.vertices[u].rep, G.vertices[v].rep)
        classes, cedges = ref.gamma_e()
        GE = gamma_e(P)
        assert {frozenset(v.members) for v in GE.vertices} == set(classes)
        got = {frozenset((frozenset(GE.vertices[u].members), frozenset(GE.vertices[v].members)))
               for u, v in GE.edges()}
        assert got == cedges

    def test_oracle_cap(self):
        from zdposet.errors import OracleCapExceeded

        with pytest.raises(OracleCapExceeded):
            clique_number_bruteforce(ZdGraph.complete(13))
