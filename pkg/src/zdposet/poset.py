"""Finite posets with a least element, stored as bitmasks.

Elements are indices ``0 .. n-1`` into the label table; index 0 is always
the least element. Every set of elements is an int mask wrapped in
:class:`ElementSet` (or :class:`IdealSet` when it is known to be
down-closed).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from . import kernels
from .config import ideal_cap
from .errors import (
    CycleError,
    DuplicateLabelError,
    EmptySubsetError,
    NoLeastElementError,
    OracleCapExceeded,
    ParseError,
    PosetError,
    UnknownLabelError,
)

__all__ = [
    "ElementSet",
    "IdealSet",
    "Poset",
    "build_poset",
    "lower_cone",
    "down_set",
    "up_set",
    "minimal_elements",
    "annihilator",
    "zero_divisors",
    "is_ideal",
    "is_prime_ideal",
    "enumerate_ideals",
    "parse_poset",
    "format_poset",
    "iter_bits",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ElementSet:
    """Immutable subset of a poset's elements."""

    __slots__ = ("mask", "size")

    def __init__(self, mask: int, size: int) -> None:
        if mask >> size:
            raise ValueError(f"mask {mask:#x} has bits outside {size} elements")
        self.mask = mask
        self.size = size

    @classmethod
    def of(cls, members: Iterable[int], size: int) -> "ElementSet":
        m = 0
        for i in members:
            m |= 1 << i
        return cls(m, size)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and i >= 0 and bool(self.mask >> i & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.mask == other.mask and self.size == other.size

    def __hash__(self) -> int:
        return hash((self.mask, self.size))

    def __le__(self, other: "ElementSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ElementSet") -> bool:
        return self.mask != other.mask and self <= other

    def __repr__(self) -> str:
        return f"{type(self).__name__}({sorted(self)})"

    def members(self) -> tuple[int, ...]:
        return tuple(self)


class IdealSet(ElementSet):
    """A down-closed, non-empty subset (always containing the least element)."""

    __slots__ = ()


class Poset:
    """A finite partial order with least element at index 0.

    ``down[j]`` is the mask of elements ``i`` with ``i <= j``; ``up`` is its
    transpose. Instances are immutable and built through :func:`build_poset`,
    :func:`parse_poset` or :meth:`from_down_masks`.
    """

    __slots__ = ("labels", "down", "up", "_ann", "_index")

    def __init__(self, labels: Sequence[str], down: Sequence[int]) -> None:
        n = len(labels)
        self.labels = tuple(labels)
        self.down = tuple(down)
        up = [0] * n
        for j, dm in enumerate(self.down):
            for i in iter_bits(dm):
                up[i] |= 1 << j
        self.up = tuple(up)
        self._ann: tuple[int, ...] | None = None
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @classmethod
    def from_down_masks(
        cls, labels: Sequence[str], down: Sequence[int], validate: bool = True
    ) -> "Poset":
        """Wrap an already closed relation whose least element is index 0."""
        if validate:
            _check_labels(labels)
            if len(down) != len(labels):
                raise PosetError("labels and down masks differ in length")
            if list(kernels.transitive_closure(down)) != list(down):
                raise PosetError("relation is not reflexive and transitive")
            for j, dm in enumerate(down):
                for i in iter_bits(dm & ~(1 << j)):
                    if down[i] >> j & 1:
                        raise CycleError(f"{labels[i]} and {labels[j]} are mutually below")
                if not dm & 1:
                    raise NoLeastElementError(f"{labels[0]} is not below {labels[j]}")
        return cls(labels, down)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def zero(self) -> int:
        return 0

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def leq_matrix(self) -> tuple[tuple[bool, ...], ...]:
        n = self.n
        return tuple(tuple(self.leq(i, j) for j in range(n)) for i in range(n))

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown element {label!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def labels_of(self, mask: int | ElementSet) -> list[str]:
        if isinstance(mask, ElementSet):
            mask = mask.mask
        return [self.labels[i] for i in iter_bits(mask)]

    @property
    def ann_masks(self) -> tuple[int, ...]:
        if self._ann is None:
            self._ann = tuple(kernels.annihilator_masks(self.down))
        return self._ann

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``i < j`` and nothing strictly between."""
        pairs = []
        for j, dm in enumerate(self.down):
            strict = dm & ~(1 << j)
            for i in iter_bits(strict):
                between = strict & self.up[i] & ~(1 << i)
                if not between:
                    pairs.append((i, j))
        pairs.sort()
        return pairs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.down == other.down

    def __hash__(self) -> int:
        return hash((self.labels, self.down))

    def __repr__(self) -> str:
        rels = ", ".join(f"{self.labels[i]}<{self.labels[j]}" for i, j in self.cover_pairs())
        return f"Poset([{' '.join(self.labels)}] {rels})"

    def encode(self) -> str:
        """Single-line canonical form: labels, then covering pairs."""
        rels = ",".join(f"{self.labels[i]}<{self.labels[j]}" for i, j in self.cover_pairs())
        return " ".join(self.labels) + " | " + rels


def _check_labels(labels: Sequence[str]) -> None:
    if not labels:
        raise PosetError("a poset needs at least one element")
    seen = set()
    for lab in labels:
        if not isinstance(lab, str) or not lab:
            raise PosetError(f"bad label {lab!r}")
        if any(c.isspace() for c in lab) or "<" in lab or "#" in lab:
            raise PosetError(f"label {lab!r} may not contain whitespace, '<' or '#'")
        if lab in seen:
            raise DuplicateLabelError(f"duplicate label {lab!r}")
        seen.add(lab)


def build_poset(labels: Sequence[str], generators: Iterable[tuple[str, str]]) -> Poset:
    """Close the generating pairs ``(a, b)`` (meaning a <= b) into a poset.

    The least element is moved to index 0; the remaining elements keep their
    given order.

    Raises
    ------
    DuplicateLabelError, UnknownLabelError
        On bad labels.
    CycleError
        If the closure relates two distinct elements both ways.
    NoLeastElementError
        If no element is below all the others.
    """
    labels = list(labels)
    _check_labels(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    down = [0] * n
    for a, b in generators:
        if a not in index:
            raise UnknownLabelError(f"unknown element {a!r}")
        if b not in index:
            raise UnknownLabelError(f"unknown element {b!r}")
        down[index[b]] |= 1 << index[a]
    down = kernels.transitive_closure(down)
    for j in range(n):
        for i in iter_bits(down[j] & ~(1 << j)):
            if down[i] >> j & 1:
                raise CycleError(f"{labels[i]} <= {labels[j]} and {labels[j]} <= {labels[i]}")
    full = (1 << n) - 1
    up = [0] * n
    for j in range(n):
        for i in iter_bits(down[j]):
            up[i] |= 1 << j
    bottoms = [i for i in range(n) if up[i] == full]
    if not bottoms:
        raise NoLeastElementError("no element is below all others")
    z = bottoms[0]
    order = [z] + [i for i in range(n) if i != z]
    pos = {old: new for new, old in enumerate(order)}
    new_down = []
    for old in order:
        m = 0
        for i in iter_bits(down[old]):
            m |= 1 << pos[i]
        new_down.append(m)
    return Poset([labels[i] for i in order], new_down)


def lower_cone(P: Poset, x: int, y: int) -> IdealSet:
    """Common lower bounds of ``x`` and ``y``."""
    return IdealSet(P.down[x] & P.down[y], P.n)


def down_set(P: Poset, x: int) -> IdealSet:
    return IdealSet(P.down[x], P.n)


def up_set(P: Poset, x: int) -> ElementSet:
    return ElementSet(P.up[x], P.n)


def minimal_elements(P: Poset, Q: ElementSet | Iterable[int]) -> ElementSet:
    if not isinstance(Q, ElementSet):
        Q = ElementSet.of(Q, P.n)
    if not Q.mask:
        raise EmptySubsetError("minimal elements of an empty set")
    q = Q.mask
    out = 0
    for x in iter_bits(q):
        if not P.down[x] & q & ~(1 << x):
            out |= 1 << x
    return ElementSet(out, P.n)


def annihilator(P: Poset, x: int) -> IdealSet:
    """All ``y`` whose only common lower bound with ``x`` is the least element.

    ``annihilator(P, 0)`` is the whole poset.
    """
    return IdealSet(P.ann_masks[x], P.n)


def zero_divisor_mask(P: Poset) -> int:
    m = 0
    for x, a in enumerate(P.ann_masks):
        if x and a != 1:
            m |= 1 << x
    return m


def zero_divisors(P: Poset) -> ElementSet:
    """Non-zero elements with a non-trivial annihilator."""
    return ElementSet(zero_divisor_mask(P), P.n)


def _is_down_closed(P: Poset, mask: int) -> bool:
    for x in iter_bits(mask):
        if P.down[x] & ~mask:
            return False
    return True


def is_ideal(P: Poset, S: ElementSet | Iterable[int]) -> bool:
    mask = S.mask if isinstance(S, ElementSet) else ElementSet.of(S, P.n).mask
    return mask != 0 and _is_down_closed(P, mask)


def is_prime_ideal(P: Poset, S: ElementSet | Iterable[int]) -> bool:
    """Proper ideal S such that L(x, y) inside S forces x or y into S."""
    mask = S.mask if isinstance(S, ElementSet) else ElementSet.of(S, P.n).mask
    if mask == 0 or mask == P.full_mask or not _is_down_closed(P, mask):
        return False
    outside = list(iter_bits(P.full_mask & ~mask))
    down = P.down
    # only pairs with both x, y outside S can violate the condition
    for a, x in enumerate(outside):
        dx = down[x]
        for y in outside[a:]:
            if dx & down[y] & ~mask == 0:
                return False
    return True


def enumerate_ideals(P: Poset, cap: int | None = None) -> list[IdealSet]:
    """Every ideal of P, ordered by mask value."""
    cap = ideal_cap() if cap is None else cap
    if P.n > cap:
        raise OracleCapExceeded(f"{P.n} elements exceeds ideal enumeration cap {cap}")
    found = {1}
    stack = [1]
    n = P.n
    while stack:
        ideal = stack.pop()
        for x in range(n):
            bit = 1 << x
            if ideal & bit:
                continue
            if P.down[x] & ~(ideal | bit) == 0:
                nxt = ideal | bit
                if nxt not in found:
                    found.add(nxt)
                    stack.append(nxt)
    return [IdealSet(m, n) for m in sorted(found)]


def parse_poset(text: str) -> Poset:
    """Read the line-based poset format.

    ``#`` starts a comment, ``elements: a b c`` declares the labels once and
    each ``rel: a < b`` line adds a generating pair.
    """
    labels: list[str] | None = None
    pairs: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(f"expected 'elements:' or 'rel:', got {line!r}", lineno)
        if key == "elements":
            if labels is not None:
                raise ParseError("'elements:' declared twice", lineno)
            labels = rest.split()
            if not labels:
                raise ParseError("'elements:' lists no labels", lineno)
            try:
                _check_labels(labels)
            except PosetError as exc:
                raise ParseError(str(exc), lineno) from None
        elif key == "rel":
            parts = rest.split("<")
            if len(parts) != 2:
                raise ParseError(f"expected 'rel: a < b', got {line!r}", lineno)
            a, b = (p.strip() for p in parts)
            if not a or not b or len(a.split()) != 1 or len(b.split()) != 1:
                raise ParseError(f"expected 'rel: a < b', got {line!r}", lineno)
            pairs.append((a, b, lineno))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if labels is None:
        raise ParseError("missing 'elements:' line")
    known = set(labels)
    for a, b, lineno in pairs:
        for lab in (a, b):
            if lab not in known:
                raise ParseError(f"unknown element {lab!r}", lineno)
    try:
        return build_poset(labels, [(a, b) for a, b, _ in pairs])
    except PosetError as exc:
        raise ParseError(str(exc)) from None


def format_poset(P: Poset, comment: str | None = None) -> str:
    """Text form listing the covering pairs; round-trips through :func:`parse_poset`."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append("elements: " + " ".join(P.labels))
    for i, j in P.cover_pairs():
        lines.append(f"rel: {P.labels[i]} < {P.labels[j]}")
    return "\n".join(lines) + "\n"
