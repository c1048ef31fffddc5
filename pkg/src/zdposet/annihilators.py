"""Annihilator families and annihilator prime ideals.

Two independent routes to the annihilator primes are provided:
:func:`annihilator_primes` takes the inclusion-maximal annihilators, while
:func:`annihilator_primes_bruteforce` tests every annihilator against the
definition of a prime ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import ideal_cap
from .errors import NotAZeroDivisorError, NoZeroDivisorsError, OracleCapExceeded, TrivialPosetError
from .poset import ElementSet, IdealSet, Poset, is_prime_ideal, iter_bits, zero_divisor_mask

__all__ = [
    "AnnEntry",
    "AnnFamily",
    "PrimeSignature",
    "BoundReport",
    "ChainReport",
    "ann_family",
    "maximal_annihilators",
    "annihilator_primes",
    "annihilator_primes_bruteforce",
    "prime_signature",
    "verify_cardinality_bound",
    "acc_chain_profile",
]


@dataclass(frozen=True)
class AnnEntry:
    ann: IdealSet
    witnesses: ElementSet
    # True when the witnesses are zero-divisors, i.e. the entry is not {0}
    in_b: bool


@dataclass(frozen=True)
class AnnFamily:
    """Distinct annihilators of the non-zero elements, ordered by least witness."""

    entries: tuple[AnnEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def b_entries(self) -> tuple[AnnEntry, ...]:
        return tuple(e for e in self.entries if e.in_b)

    def inclusion_pairs(self) -> list[tuple[int, int]]:
        """Index pairs ``(i, j)`` with entry i strictly inside entry j."""
        out = []
        for i, a in enumerate(self.entries):
            for j, b in enumerate(self.entries):
                if i != j and a.ann < b.ann:
                    out.append((i, j))
        return out

    def maximal(self) -> list[AnnEntry]:
        masks = [e.ann.mask for e in self.entries]
        return [
            e for e in self.entries
            if not any(m != e.ann.mask and e.ann.mask & ~m == 0 for m in masks)
        ]


@dataclass(frozen=True)
class PrimeSignature:
    subject: int
    signature: tuple[IdealSet, ...]


@dataclass(frozen=True)
class BoundReport:
    vertices: int
    ann: int
    limit: int

    @property
    def tight(self) -> bool:
        return self.vertices == self.limit

    @property
    def holds(self) -> bool:
        return self.vertices <= self.limit

    def to_dict(self) -> dict:
        return {"v": self.vertices, "ann": self.ann, "limit": self.limit, "tight": self.tight}


@dataclass(frozen=True)
class ChainReport:
    length: int
    witness: tuple[IdealSet, ...]


def ann_family(P: Poset) -> AnnFamily:
    if P.n < 2:
        raise TrivialPosetError("the annihilator family needs a non-zero element")
    ann = P.ann_masks
    groups: dict[int, int] = {}
    for x in range(1, P.n):
        groups[ann[x]] = groups.get(ann[x], 0) | (1 << x)
    entries = [
        AnnEntry(IdealSet(a, P.n), ElementSet(w, P.n), a != 1) for a, w in groups.items()
    ]
    entries.sort(key=lambda e: e.witnesses.mask & -e.witnesses.mask)
    return AnnFamily(tuple(entries))


def maximal_annihilators(P: Poset) -> list[IdealSet]:
    return [e.ann for e in ann_family(P).maximal()]


def annihilator_primes(P: Poset) -> list[IdealSet]:
    """Annihilator prime ideals, found as the maximal annihilators."""
    if not zero_divisor_mask(P):
        raise NoZeroDivisorsError("no zero-divisors")
    return maximal_annihilators(P)


def annihilator_primes_bruteforce(P: Poset, cap: int | None = None) -> list[IdealSet]:
    """Annihilators of zero-divisors that pass the prime-ideal test directly.

    ``{0}`` is prime only when there are no zero-divisors, so ranging over
    zero-divisors instead of all non-zero elements changes nothing except
    that a poset without zero-divisors yields an empty list.
    """
    cap = ideal_cap() if cap is None else cap
    if P.n > cap:
        raise OracleCapExceeded(f"{P.n} elements exceeds oracle cap {cap}")
    seen = set()
    out = []
    for x in range(1, P.n):
        a = P.ann_masks[x]
        if a == 1 or a in seen:
            continue
        seen.add(a)
        ideal = IdealSet(a, P.n)
        if is_prime_ideal(P, ideal):
            out.append(ideal)
    return out


def prime_signature(
    P: Poset, x: int, primes: list[IdealSet] | None = None
) -> PrimeSignature:
    """The annihilator primes containing ``ann(x)``."""
    if x == 0 or P.ann_masks[x] == 1:
        raise NotAZeroDivisorError(f"{P.labels[x]} is not a non-zero zero-divisor")
    if primes is None:
        primes = annihilator_primes(P)
    a = P.ann_masks[x]
    return PrimeSignature(x, tuple(p for p in primes if a & ~p.mask == 0))


def verify_cardinality_bound(P: Poset) -> BoundReport:
    z = zero_divisor_mask(P)
    if not z:
        raise NoZeroDivisorsError("no zero-divisors")
    classes = {P.ann_masks[x] for x in iter_bits(z)}
    k = len(annihilator_primes(P))
    return BoundReport(len(classes), k, 2**k - 2)


def acc_chain_profile(P: Poset) -> ChainReport:
    """A longest strictly increasing chain of annihilators of non-zero elements."""
    fam = ann_family(P)
    entries = sorted(fam.entries, key=lambda e: (len(e.ann), e.ann.mask))
    best_len = [1] * len(entries)
    prev = [-1] * len(entries)
    for j, b in enumerate(entries):
        for i in range(j):
            if entries[i].ann < b.ann and best_len[i] + 1 > best_len[j]:
                best_len[j] = best_len[i] + 1
                prev[j] = i
    end = max(range(len(entries)), key=lambda j: (best_len[j], -j))
    chain = []
    while end >= 0:
        chain.append(entries[end].ann)
        end = prev[end]
    chain.reverse()
    return ChainReport(len(chain), tuple(chain))
