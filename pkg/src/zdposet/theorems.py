"""Executable checks of the structural results on Γ(P) and Γ_E(P).

:func:`check_poset` runs every check on one poset and returns a
:class:`TheoremReport`; :func:`sweep` runs it over every labelled poset with
a least element up to a given size. A failing check is recorded with a
witness (at most four vertices, elements or ideals) instead of raising, so
a sweep always completes.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Callable

from .annihilators import annihilator_primes, annihilator_primes_bruteforce
from .config import graph_cap
from .errors import CapExceeded
from .generators import MAX_ENUMERATION_SIZE, count_posets_with_zero, enumerate_posets_with_zero
from .graphs import (
    INF,
    ann_classes,
    classify_shape,
    clique_number,
    diameter,
    gamma,
    gamma_e,
    girth,
    reduce_graph,
)
from .oracles import clique_number_bruteforce, diameter_bruteforce, girth_bruteforce
from .poset import Poset, iter_bits, minimal_elements, zero_divisor_mask

__all__ = [
    "PASS",
    "FAIL",
    "NOT_APPLICABLE",
    "CHECK_NAMES",
    "Verdict",
    "TheoremReport",
    "SweepSummary",
    "check_poset",
    "sweep",
]

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"

INFINITE_ONLY = "infinite-only content"
NO_ZERO_DIVISORS = "no zero-divisors"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: tuple[str, ...] = ()
    reason: str | None = None
    detail: dict | None = None

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.status == FAIL:
            out["witness"] = list(self.witness)
        if self.reason is not None:
            out["reason"] = self.reason
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def _pass(detail: dict | None = None) -> Verdict:
    return Verdict(PASS, detail=detail)


def _fail(*witness: str, detail: dict | None = None, reason: str | None = None) -> Verdict:
    return Verdict(FAIL, tuple(witness[:4]), reason=reason, detail=detail)


def _na(reason: str) -> Verdict:
    return Verdict(NOT_APPLICABLE, reason=reason)


def _num(x: float) -> int | str:
    return "inf" if x == INF else int(x)


class _Context:
    """Everything the checks share, computed once per poset."""

    def __init__(self, P: Poset) -> None:
        self.P = P
        self.ann = P.ann_masks
        self.z = zero_divisor_mask(P)
        self.zlist = list(iter_bits(self.z))
        self.G = gamma(P)
        self.classes = ann_classes(P)
        self.GE = gamma_e(P, self.classes)
        self.cls_ann = [c.ann.mask for c in self.classes]
        self.cls_rep = [c.representative for c in self.classes]
        self.cls_of = {}
        for i, c in enumerate(self.classes):
            for x in c.members:
                self.cls_of[x] = i
        self.vE = len(self.classes)
        self.primes = [p.mask for p in annihilator_primes(P)]
        self.prime_set = set(self.primes)
        self.is_prime = [a in self.prime_set for a in self.cls_ann]
        self.shape_E = classify_shape(self.GE)
        self.shape_G = classify_shape(self.G)
        self.diam_G = diameter(self.G)
        self.diam_E = diameter(self.GE)
        self.girth_G = girth(self.G)
        self.girth_E = girth(self.GE)

    def el(self, x: int) -> str:
        return self.P.labels[x]

    def cl(self, i: int) -> str:
        return self.GE.name(i)

    def ideal(self, mask: int) -> str:
        return "{" + ",".join(self.P.labels_of(mask)) + "}"


def _fact_3_1(c: _Context) -> Verdict:
    G, GE = c.G, c.GE
    for i, x in enumerate(c.zlist):
        for j in range(i + 1, len(c.zlist)):
            y = c.zlist[j]
            cx, cy = c.cls_of[x], c.cls_of[y]
            in_g = G.adjacent(i, j)
            if cx == cy:
                if in_g:
                    return _fail(c.el(x), c.el(y), reason="adjacent inside one class")
            elif in_g != GE.adjacent(cx, cy):
                return _fail(c.el(x), c.el(y), c.cl(cx), c.cl(cy))
    return _pass()


def _prop_3_2(c: _Context) -> Verdict:
    dG = c.G.distances()
    dE = c.GE.distances()
    sub = {}
    bad: tuple[str, ...] = ()
    for i, x in enumerate(c.zlist):
        for j, y in enumerate(c.zlist):
            cx, cy = c.cls_of[x], c.cls_of[y]
            if cx != cy and dG[i][j] != dE[cx][cy]:
                bad = bad or (c.el(x), c.el(y))
    sub["distance"] = FAIL if bad else PASS
    # pairs of zero-divisors with a non-trivial common lower bound
    meeting_pairs_differ = any(
        not c.ann[x] >> y & 1 and c.ann[x] != c.ann[y] for x in c.zlist for y in c.zlist
    )
    sub["a"] = PASS if (c.diam_E == 3) == (c.diam_G == 3) else FAIL
    sub["b"] = PASS if (c.diam_E == 2) == (c.diam_G == 2 and meeting_pairs_differ) else FAIL
    sub["c"] = PASS if (c.diam_E == 1) == (not meeting_pairs_differ) else FAIL
    detail = {"sub": sub, "diam_gamma": _num(c.diam_G), "diam_gamma_e": _num(c.diam_E)}
    if FAIL in sub.values():
        return _fail(*bad, detail=detail)
    return _pass(detail)


def _prop_3_3(c: _Context) -> Verdict:
    a = c.girth_E == 3
    b = c.girth_G == 3
    v = c.vE >= 3
    detail = {"girth_gamma": _num(c.girth_G), "girth_gamma_e": _num(c.girth_E), "vertices_gamma_e": c.vE}
    if a == b == v and (c.girth_E == INF) == (c.vE == 2):
        return _pass(detail)
    return _fail(detail=detail)


def _cor_3_4(c: _Context) -> Verdict:
    if c.shape_E.is_cycle and c.vE >= 4:
        return _fail(*(c.cl(i) for i in range(c.vE)))
    return _pass()


def _prop_3_5(c: _Context) -> Verdict:
    seen: dict[int, int] = {}
    for i, m in enumerate(c.GE.adj):
        if m in seen:
            return _fail(c.cl(seen[m]), c.cl(i))
        seen[m] = i
    if reduce_graph(c.GE).order != c.vE:
        return _fail(reason="reduction of the reduced graph merged vertices")
    if not reduce_graph(c.G).same_structure(c.GE):
        return _fail(reason="neighbourhood reduction of gamma differs from the class graph")
    return _pass()


def _cor_3_6(c: _Context) -> Verdict:
    parts = c.shape_E.complete_multipartite
    if parts is not None:
        for part in parts:
            if len(part) > 1:
                return _fail(*(c.cl(i) for i in part))
    if c.shape_E.is_complete and (parts is None or len(parts) != c.vE):
        return _fail(reason="complete graph not recognised as multipartite")
    return _pass()


def _cor_3_7(c: _Context) -> Verdict:
    if c.vE < 3:
        return _na("fewer than three classes")
    if c.shape_E.is_star:
        return _fail(*(c.cl(i) for i in range(min(c.vE, 4))))
    return _pass()


def _cor_3_8(c: _Context) -> Verdict:
    if c.vE != 3:
        return _na("class graph does not have exactly three vertices")
    if not c.shape_E.is_complete:
        return _fail(c.cl(0), c.cl(1), c.cl(2))
    return _pass()


def _prop_4_2(c: _Context) -> Verdict:
    brute = {p.mask for p in annihilator_primes_bruteforce(c.P)}
    diff = sorted(brute ^ c.prime_set)
    if diff:
        return _fail(*(c.ideal(m) for m in diff))
    return _pass({"primes": len(brute)})


def _lemma_4_3_a(c: _Context) -> Verdict:
    A, N = c.cls_ann, c.GE.adj
    for i in range(c.vE):
        for j in range(c.vE):
            if i == j:
                continue
            ann_sub = A[i] != A[j] and A[i] & ~A[j] == 0
            nbd_sub = N[i] != N[j] and N[i] & ~N[j] == 0
            if ann_sub != nbd_sub:
                return _fail(c.cl(i), c.cl(j))
    return _pass()


def _prime_classes(c: _Context) -> list[int]:
    return [i for i in range(c.vE) if c.is_prime[i]]


def _lemma_4_3_b(c: _Context) -> Verdict:
    A, N = c.cls_ann, c.GE.adj
    for z in _prime_classes(c):
        for x in range(c.vE):
            not_inside = A[x] & ~A[z] != 0
            meet_trivial = bool(A[x] >> c.cls_rep[z] & 1)
            nbd_inside = N[x] & ~N[z] == 0
            adjacent = bool(N[x] >> z & 1)
            if not_inside != meet_trivial or nbd_inside == adjacent:
                return _fail(c.cl(x), c.cl(z))
    return _pass()


def _lemma_4_3_c(c: _Context) -> Verdict:
    A = c.cls_ann
    for x in range(c.vE):
        for y in range(x, c.vE):
            union = A[x] | A[y]
            covered = any(union & ~p == 0 for p in c.primes)
            meet_nontrivial = not A[x] >> c.cls_rep[y] & 1
            if covered != meet_nontrivial:
                return _fail(c.cl(x), c.cl(y))
    return _pass()


def _lemma_4_3_d(c: _Context) -> Verdict:
    for x in range(c.vE):
        if not any(c.cls_ann[x] & ~p for p in c.primes):
            return _fail(c.cl(x))
    return _pass()


def _lemma_4_3_e(c: _Context) -> Verdict:
    nonprime = [i for i in range(c.vE) if not c.is_prime[i]]
    if not nonprime:
        return _na("every class is prime")
    P = c.P
    for x in nonprime:
        outside = [u for u in range(P.n) if not c.cls_ann[x] >> u & 1]
        if not any(c.ann[u] >> v & 1 for u in outside for v in outside):
            return _fail(c.cl(x))
    return _pass()


def _prop_4_4_a(c: _Context) -> Verdict:
    pc = _prime_classes(c)
    for a in range(len(pc)):
        for b in range(a + 1, len(pc)):
            if not c.GE.adjacent(pc[a], pc[b]):
                return _fail(c.cl(pc[a]), c.cl(pc[b]))
    return _pass()


def _prop_4_4_b(c: _Context) -> Verdict:
    N = c.GE.adj
    full = (1 << c.vE) - 1
    for z in range(c.vE):
        rest = full & ~N[z]
        independent = all(N[u] & rest == 0 for u in iter_bits(rest))
        if independent != c.is_prime[z]:
            return _fail(c.cl(z))
    return _pass()


def _prop_4_4_c(c: _Context) -> Verdict:
    pmask = sum(1 << i for i in _prime_classes(c))
    for v in range(c.vE):
        if not c.GE.adj[v] & pmask:
            return _fail(c.cl(v))
    if len(c.primes) < 2:
        return _fail(reason="fewer than two annihilator primes")
    return _pass()


def _prop_4_5(c: _Context) -> Verdict:
    k = len(c.primes)
    wG = clique_number(c.G)
    wE = clique_number(c.GE)
    detail = {"ann": k, "omega": wG, "omega_gamma_e": wE}
    if not k == wG == wE or (k >= 3) != (c.vE >= 3):
        return _fail(detail=detail)
    return _pass(detail)


def _prop_4_8(c: _Context) -> Verdict:
    degs = [bin(m).count("1") for m in c.GE.adj]
    top = max(degs)
    for v, d in enumerate(degs):
        if d == top and not c.is_prime[v]:
            return _fail(c.cl(v))
    return _pass()


def _cor_4_9(c: _Context) -> Verdict:
    if c.shape_E.is_regular != c.shape_E.is_complete:
        return _fail()
    return _pass()


def _prop_4_10(c: _Context) -> Verdict:
    if not c.shape_G.is_regular:
        return _na("gamma is not regular")
    if not c.shape_E.is_complete:
        return _fail()
    return _pass()


def _prop_4_11(c: _Context) -> Verdict:
    k = len(c.primes)
    limit = 2**k - 2
    detail = {"v": c.vE, "ann": k, "limit": limit, "tight": c.vE == limit}
    if c.vE > limit:
        return _fail(detail=detail)
    seen: dict[int, int] = {}
    full = (1 << k) - 1
    for x in range(c.vE):
        sig = 0
        for i, p in enumerate(c.primes):
            if c.cls_ann[x] & ~p == 0:
                sig |= 1 << i
        if sig == 0 or sig == full:
            return _fail(c.cl(x), detail=detail)
        if sig in seen:
            return _fail(c.cl(seen[sig]), c.cl(x), detail=detail)
        seen[sig] = x
    return _pass(detail)


def _prop_4_13(c: _Context) -> Verdict:
    P = c.P
    mins = minimal_elements(P, range(1, P.n)).mask
    for x in c.zlist:
        if not P.down[x] & mins:
            return _fail(c.el(x), reason="element above no minimal non-zero element")
    from_mins = {c.ann[z] for z in iter_bits(mins)}
    diff = sorted(from_mins ^ c.prime_set)
    if diff:
        return _fail(*(c.ideal(m) for m in diff))
    return _pass()


def _sanity_connectivity(c: _Context) -> Verdict:
    if c.diam_G == INF or c.diam_E == INF:
        return _fail()
    return _pass()


def _sanity_diam_le_3(c: _Context) -> Verdict:
    if c.diam_G > 3 or c.diam_E > 3:
        return _fail(detail={"diam_gamma": _num(c.diam_G), "diam_gamma_e": _num(c.diam_E)})
    return _pass()


def _sanity_girth_trichotomy(c: _Context) -> Verdict:
    if c.girth_G not in (3, 4, INF) or c.girth_E not in (3, INF):
        return _fail(detail={"girth_gamma": _num(c.girth_G), "girth_gamma_e": _num(c.girth_E)})
    return _pass()


def _oracle_graphs(c: _Context) -> Verdict:
    cap = graph_cap()
    if c.G.order > cap:
        return _na(f"gamma has more than {cap} vertices")
    for name, G in (("gamma", c.G), ("gamma_e", c.GE)):
        pairs = (
            ("clique_number", clique_number(G), clique_number_bruteforce(G, cap)),
            ("girth", girth(G), girth_bruteforce(G, cap)),
            ("diameter", diameter(G), diameter_bruteforce(G, cap)),
        )
        for what, fast, slow in pairs:
            if fast != slow:
                return _fail(name, what, str(_num(fast)), str(_num(slow)))
    return _pass()


def _infinite_only(c: _Context) -> Verdict:
    return _na(INFINITE_ONLY)


_CHECKS: dict[str, Callable[[_Context], Verdict]] = {
    "fact_3_1": _fact_3_1,
    "prop_3_2": _prop_3_2,
    "prop_3_3": _prop_3_3,
    "cor_3_4": _cor_3_4,
    "prop_3_5": _prop_3_5,
    "cor_3_6": _cor_3_6,
    "cor_3_7": _cor_3_7,
    "cor_3_8": _cor_3_8,
    "prop_4_2": _prop_4_2,
    "lemma_4_3_a": _lemma_4_3_a,
    "lemma_4_3_b": _lemma_4_3_b,
    "lemma_4_3_c": _lemma_4_3_c,
    "lemma_4_3_d": _lemma_4_3_d,
    "lemma_4_3_e": _lemma_4_3_e,
    "prop_4_4_a": _prop_4_4_a,
    "prop_4_4_b": _prop_4_4_b,
    "prop_4_4_c": _prop_4_4_c,
    "prop_4_5": _prop_4_5,
    "prop_4_7": _infinite_only,
    "prop_4_8": _prop_4_8,
    "cor_4_9": _cor_4_9,
    "prop_4_10": _prop_4_10,
    "prop_4_11": _prop_4_11,
    "cor_4_12": _infinite_only,
    "prop_4_13": _prop_4_13,
    "sanity_connectivity": _sanity_connectivity,
    "sanity_diam_le_3": _sanity_diam_le_3,
    "sanity_girth_trichotomy": _sanity_girth_trichotomy,
    "oracle_graphs": _oracle_graphs,
}

CHECK_NAMES: tuple[str, ...] = tuple(_CHECKS)


@dataclass(frozen=True)
class TheoremReport:
    poset: str
    verdicts: dict[str, Verdict]

    def failures(self) -> dict[str, Verdict]:
        return {k: v for k, v in self.verdicts.items() if v.status == FAIL}

    @property
    def ok(self) -> bool:
        return not self.failures()

    def to_dict(self) -> dict:
        return {"poset": self.poset, "verdicts": {k: v.to_dict() for k, v in self.verdicts.items()}}


def check_poset(P: Poset) -> TheoremReport:
    """Run every check on ``P``. Never raises for a valid poset."""
    if not zero_divisor_mask(P):
        return TheoremReport(P.encode(), {name: _na(NO_ZERO_DIVISORS) for name in CHECK_NAMES})
    ctx = _Context(P)
    verdicts = {}
    for name, fn in _CHECKS.items():
        try:
            verdicts[name] = fn(ctx)
        except Exception as exc:  # a crash inside a check is reported as a failure
            verdicts[name] = _fail(f"{type(exc).__name__}: {exc}")
    return TheoremReport(P.encode(), verdicts)


@dataclass
class SweepSummary:
    max_n: int
    instances: int = 0
    sizes: dict[int, int] = field(default_factory=dict)
    counts: dict[str, Counter] = field(
        default_factory=lambda: {name: Counter() for name in CHECK_NAMES}
    )
    failures: list[dict] = field(default_factory=list)

    def add(self, report: TheoremReport, size: int) -> None:
        self.instances += 1
        self.sizes[size] = self.sizes.get(size, 0) + 1
        for name, v in report.verdicts.items():
            self.counts[name][v.status] += 1
            if v.status == FAIL:
                self.failures.append({"poset": report.poset, "check": name, "witness": list(v.witness)})

    def merge(self, other: "SweepSummary") -> None:
        self.instances += other.instances
        for k, v in other.sizes.items():
            self.sizes[k] = self.sizes.get(k, 0) + v
        for name in CHECK_NAMES:
            self.counts[name].update(other.counts[name])
        self.failures.extend(other.failures)

    @property
    def failure_count(self) -> int:
        return sum(c[FAIL] for c in self.counts.values())

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "instances": self.instances,
            "sizes": {str(k): self.sizes[k] for k in sorted(self.sizes)},
            "counts": {
                name: {s: self.counts[name][s] for s in (PASS, FAIL, NOT_APPLICABLE)}
                for name in CHECK_NAMES
            },
            "failures": sorted(self.failures, key=lambda f: (f["poset"], f["check"])),
        }


def _run_range(task: tuple[int, int, int]) -> SweepSummary:
    size, start, stop = task
    part = SweepSummary(size)
    for P in islice(enumerate_posets_with_zero(size), start, stop):
        part.add(check_poset(P), size)
    return part


def _tasks(max_n: int, pieces: int) -> list[tuple[int, int, int]]:
    tasks = []
    for size in range(1, max_n + 1):
        total = count_posets_with_zero(size)
        step = max(1, math.ceil(total / pieces))
        tasks.extend((size, s, min(s + step, total)) for s in range(0, total, step))
    return tasks


def sweep(max_n: int, workers: int = 1, progress: Callable[[str], None] | None = None) -> SweepSummary:
    """Check every labelled poset with a least element on at most ``max_n`` elements.

    The summary does not depend on ``workers``: partial summaries are merged
    by summing counters and sorting failures.
    """
    if not isinstance(max_n, int) or not 1 <= max_n <= MAX_ENUMERATION_SIZE:
        raise CapExceeded(f"max size must be in [1, {MAX_ENUMERATION_SIZE}], got {max_n}")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    summary = SweepSummary(max_n)
    if workers == 1:
        for size in range(1, max_n + 1):
            for P in enumerate_posets_with_zero(size):
                summary.add(check_poset(P), size)
            if progress:
                progress(f"size {size}: {summary.sizes.get(size, 0)} posets")
    else:
        tasks = _tasks(max_n, workers * 4)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_range, tasks):
                summary.merge(part)
    summary.failures.sort(key=lambda f: (f["poset"], f["check"]))
    return summary

