from __future__ import annotations

from itertools import product

import pytest

from zdposet import enumerate_posets_with_zero, format_poset, gamma, gamma_e, named_example, random_poset
from zdposet.errors import BadParamsError, CapExceeded, UnknownExampleError
from zdposet.generators import count_posets_with_zero
from zdposet.poset import Poset, zero_divisor_mask


def brute_count(n: int) -> int:
    """Relations on n points (all 2^(n*n) of them) that are partial orders with a least element."""
    count = 0
    cells = [(i, j) for i in range(n) for j in range(n)]
    for bits in product((False, True), repeat=n * n):
        rel = {c for c, b in zip(cells, bits) if b}
        if any((i, i) not in rel for i in range(n)):
            continue
        if any((j, i) in rel for i, j in rel if i != j):
            continue
        if any((i, k) not in rel for i, j in rel for j2, k in rel if j == j2):
            continue
        if any(all((b, x) in rel for x in range(n)) for b in range(n)):
            count += 1
    return count


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2)])
def test_tiny_counts(n, expected):
    assert len(list(enumerate_posets_with_zero(n))) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_count_matches_relation_filter(n):
    posets = list(enumerate_posets_with_zero(n))
    assert len(posets) == brute_count(n) == count_posets_with_zero(n)
    # as labelled relations the posets are pairwise different
    keys = {tuple(sorted((P.labels[i], P.labels[j]) for j in range(n) for i in range(n) if P.leq(i, j)))
            for P in posets}
    assert len(keys) == len(posets)


def test_enumeration_is_valid_and_deterministic():
    first = list(enumerate_posets_with_zero(5))
    assert first == list(enumerate_posets_with_zero(5))
    for P in first[::37]:
        assert Poset.from_down_masks(P.labels, P.down) == P


def test_enumeration_caps():
    with pytest.raises(CapExceeded):
        next(enumerate_posets_with_zero(8))
    with pytest.raises(CapExceeded):
        next(enumerate_posets_with_zero(0))


def test_named_examples():
    assert len(named_example("antichain", 3)) == 4
    P = named_example("deg_counterexample")
    assert len(P) == 11
    assert bin(zero_divisor_mask(P)).count("1") == 10
    Q = named_example("powerset", 3)
    assert len(Q) == 8 and gamma_e(Q).order == 6
    assert format_poset(named_example("remark41_trunc", 4)) == format_poset(named_example("antichain", 4))
    B = named_example("bipartite_example")
    assert gamma(B).order == 4 and gamma(B).edge_count() == 4


@pytest.mark.parametrize("k", range(2, 9))
def test_p0_truncations_have_two_classes(k):
    P = named_example("p0_trunc", k)
    assert gamma_e(P).order == 2
    assert gamma(P).order == k + 1


def test_named_example_errors():
    with pytest.raises(UnknownExampleError):
        named_example("nope")
    with pytest.raises(BadParamsError):
        named_example("antichain", 0)
    with pytest.raises(BadParamsError):
        named_example("deg_counterexample", 3)


def test_random_is_reproducible():
    a = random_poset(9, 0.3, 12345)
    assert format_poset(a) == format_poset(random_poset(9, 0.3, 12345))
    assert a == random_poset(9, 0.3, 12345)
    assert any(random_poset(9, 0.3, s) != a for s in range(1, 6))


def test_random_extremes():
    P = random_poset(6, 0.0, 7)
    assert P.cover_pairs() == [(0, i) for i in range(1, 6)]
    Q = random_poset(6, 1.0, 7)
    assert all(Q.leq(i, j) or Q.leq(j, i) for i in range(6) for j in range(6))
    assert zero_divisor_mask(Q) == 0
    assert len(random_poset(1, 0.5, 0)) == 1


def test_random_bad_params():
    with pytest.raises(BadParamsError):
        random_poset(0, 0.5, 1)
    with pytest.raises(BadParamsError):
        random_poset(4, 1.5, 1)
