"""Example posets, random posets and exhaustive enumeration."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator, Sequence

from . import kernels
from .errors import BadParamsError, CapExceeded, UnknownExampleError
from .poset import Poset, build_poset

__all__ = [
    "EXAMPLES",
    "MAX_ENUMERATION_SIZE",
    "named_example",
    "random_poset",
    "enumerate_posets_with_zero",
    "count_posets_with_zero",
    "set_label",
]

MAX_ENUMERATION_SIZE = 7


def set_label(s: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def _inclusion_poset(sets: list[frozenset[int]]) -> Poset:
    labels = [set_label(s) for s in sets]
    gens = [
        (labels[i], labels[j])
        for i, a in enumerate(sets)
        for j, b in enumerate(sets)
        if i != j and a < b
    ]
    return build_poset(labels, gens)


def antichain(n: int) -> Poset:
    """The empty set below the singletons {1}..{n}."""
    return _inclusion_poset([frozenset()] + [frozenset({i}) for i in range(1, n + 1)])


def powerset(n: int) -> Poset:
    sets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    return _inclusion_poset(sets)


def p0_trunc(k: int) -> Poset:
    """{}, {1}, {2}, {2,3}, ..., {2,k+1}."""
    sets = [frozenset(), frozenset({1}), frozenset({2})]
    sets += [frozenset({2, j}) for j in range(3, k + 2)]
    return _inclusion_poset(sets)


def deg_counterexample() -> Poset:
    sets = [frozenset()] + [frozenset({i}) for i in range(1, 7)]
    sets += [frozenset(s) for s in ({1, 2}, {3, 4}, {3, 5}, {3, 6})]
    return _inclusion_poset(sets)


def bipartite_example() -> Poset:
    # two chains 0<a<b and 0<c<d: every cross pair meets only at 0
    return build_poset(["0", "a", "b", "c", "d"], [("0", "a"), ("a", "b"), ("0", "c"), ("c", "d")])


# name -> (builder, default parameter or None when the example takes none, min, max)
EXAMPLES = {
    "antichain": (antichain, 3, 1, 62),
    "powerset": (powerset, 3, 1, 8),
    "p0_trunc": (p0_trunc, 3, 1, 60),
    "deg_counterexample": (deg_counterexample, None, None, None),
    "remark41_trunc": (antichain, 3, 1, 62),
    "bipartite_example": (bipartite_example, None, None, None),
}


def named_example(name: str, param: int | None = None) -> Poset:
    """Build a named example; ``param`` is n for antichain/powerset/remark41_trunc, k for p0_trunc."""
    try:
        builder, default, lo, hi = EXAMPLES[name]
    except KeyError:
        raise UnknownExampleError(
            f"unknown example {name!r}; choose from {', '.join(sorted(EXAMPLES))}"
        ) from None
    if default is None:
        if param is not None:
            raise BadParamsError(f"example {name!r} takes no parameter")
        return builder()
    value = default if param is None else param
    if not isinstance(value, int) or isinstance(value, bool) or not lo <= value <= hi:
        raise BadParamsError(f"example {name!r} needs an integer parameter in [{lo}, {hi}]")
    return builder(value)


def random_poset(n: int, density: float, seed: int) -> Poset:
    """Random order on n-1 points plus an adjoined bottom element ``0``.

    Each pair ``i < j`` of the points 1..n-1 is related with probability
    ``density`` before transitive closure. Fully determined by the arguments.
    """
    if not isinstance(n, int) or n < 1:
        raise BadParamsError("size must be a positive integer")
    if not 0.0 <= density <= 1.0:
        raise BadParamsError("density must lie in [0, 1]")
    rng = random.Random(seed)
    labels = [str(i) for i in range(n)]
    gens = [("0", str(i)) for i in range(1, n)]
    for i in range(1, n):
        for j in range(i + 1, n):
            if rng.random() < density:
                gens.append((str(i), str(j)))
    return build_poset(labels, gens)


def count_posets_with_zero(n: int) -> int:
    _check_size(n)
    return n * len(kernels.poset_down_masks(n - 1))


def _check_size(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_ENUMERATION_SIZE:
        raise CapExceeded(f"enumeration size must be in [1, {MAX_ENUMERATION_SIZE}], got {n}")


def enumerate_posets_with_zero(n: int) -> Iterator[Poset]:
    """Every labelled poset on ``0..n-1`` that has a least element, once each.

    Outer loop: which label is the bottom. Inner loop: every partial order on
    the other n-1 labels, in kernel enumeration order.
    """
    _check_size(n)
    orders = kernels.poset_down_masks(n - 1)
    for bottom in range(n):
        labels = [str(bottom)] + [str(i) for i in range(n) if i != bottom]
        for rest in orders:
            down = [1] + [(d << 1) | 1 for d in rest]
            yield Poset(labels, down)
