"""Sumset algebra over finite sets of non-negative integers.

Sets are plain ``frozenset[int]`` values at the API boundary. Inside a
:class:`GroundSet` every subset is also addressable as a bit-vector ``mask``
whose bit ``i`` stands for the ``i``-th smallest element of the ground set;
masks are what the search and enumeration code works on.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import GroundSetError, SumLabelError
from .kernels import sumset_table as _sumset_table

DEFAULT_MAX_GROUND = 6

IntSet = frozenset


def intset(values: Iterable[int]) -> frozenset[int]:
    """Build an IntSet, rejecting negative or non-integer members."""
    out = frozenset(values)
    if all(type(v) is int for v in out) and (not out or min(out) >= 0):
        return out
    for v in out:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise SumLabelError(f"set members must be non-negative integers, got {v!r}")
    return out


def sorted_elements(s: Iterable[int]) -> list[int]:
    return sorted(s)


def format_set(s: Iterable[int], braces: bool = False) -> str:
    body = ",".join(str(v) for v in sorted(s))
    return "{" + body + "}" if braces else body


def parse_set(text: str) -> frozenset[int]:
    """Parse the command-line form ``0,1,3`` (blank means the empty set)."""
    text = text.strip().strip("{}")
    if not text:
        return frozenset()
    try:
        return intset(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise SumLabelError(f"malformed set {text!r}") from exc


def sumset(a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
    """Return ``{x + y : x in a, y in b}``."""
    a = intset(a)
    b = intset(b)
    if not a or not b:
        raise SumLabelError("empty set-label operand")
    return frozenset(x + y for x in a for y in b)


def max_ground_size() -> int:
    raw = os.environ.get("SUMSET_MAX_GROUND")
    if raw is None:
        return DEFAULT_MAX_GROUND
    try:
        return int(raw)
    except ValueError as exc:
        raise GroundSetError(f"SUMSET_MAX_GROUND must be an integer, got {raw!r}") from exc


@dataclass(frozen=True)
class GroundSet:
    """The finite ground set X; always contains 0."""

    elements: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, elements: Iterable[int], limit: int | None = None):
        elems = tuple(sorted(intset(elements)))
        if not elems:
            raise GroundSetError("ground set must be non-empty")
        if elems[0] != 0:
            raise GroundSetError("ground set must contain 0")
        limit = max_ground_size() if limit is None else limit
        if len(elems) > limit:
            raise GroundSetError(f"ground set has {len(elems)} elements, limit is {limit}")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(elems)})

    @classmethod
    def parse(cls, text: str) -> "GroundSet":
        return cls(parse_set(text))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, v) -> bool:
        return v in self._index

    def __str__(self) -> str:
        return format_set(self.elements, braces=True)

    @property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    @property
    def n_masks(self) -> int:
        return 1 << len(self.elements)

    @property
    def full_mask(self) -> int:
        return self.n_masks - 1

    @property
    def zero_mask(self) -> int:
        # 0 is always the smallest element
        return 1

    def contains_set(self, s: Iterable[int]) -> bool:
        return all(v in self._index for v in s)

    def to_mask(self, s: Iterable[int]) -> int:
        m = 0
        for v in s:
            try:
                m |= 1 << self._index[v]
            except KeyError:
                raise SumLabelError(
                    f"{format_set(s, braces=True)} is not a subset of ground set {self}"
                ) from None
        return m

    def from_mask(self, m: int) -> frozenset[int]:
        return frozenset(v for i, v in enumerate(self.elements) if m >> i & 1)

    def nonempty_masks(self) -> range:
        return range(1, self.n_masks)

    def subsets(self) -> list[frozenset[int]]:
        """All non-empty subsets in canonical (ascending mask) order."""
        return [self.from_mask(m) for m in self.nonempty_masks()]

    @cached_property
    def table(self) -> list[int]:
        """Flat ``n_masks * n_masks`` sumset table over masks; -1 where the sum leaves X."""
        return _cached_table(self.elements)

    def sum_mask(self, a: int, b: int) -> int:
        return self.table[a * self.n_masks + b]


@lru_cache(maxsize=32)
def _cached_table(elements: tuple[int, ...]) -> list[int]:
    return _sumset_table(list(elements))


def subset_key(s: Iterable[int], x: GroundSet) -> int:
    """Canonical sort key of a subset of ``x``."""
    return x.to_mask(s)


def canonical(family: Iterable[Iterable[int]], x: GroundSet) -> tuple[frozenset[int], ...]:
    """Deduplicate and order a family of subsets of ``x`` canonically."""
    masks = sorted({x.to_mask(s) for s in family})
    return tuple(x.from_mask(m) for m in masks)


def nontrivial_representations(
    c: Iterable[int], x: GroundSet
) -> list[tuple[frozenset[int], frozenset[int], bool]]:
    """Every unordered pair ``{A, B}`` with ``A + B == c`` and neither summand ``{0}``.

    Each entry is ``(A, B, is_self_pair)`` with ``A`` canonically not after ``B``.
    Self-pairs (``A == B``) cannot label an edge of a simple graph.
    """
    c = intset(c)
    if not c:
        raise SumLabelError("empty set-label operand")
    if not x.contains_set(c):
        raise SumLabelError("not a subset of ground set")
    target = x.to_mask(c)
    return [
        (x.from_mask(a), x.from_mask(b), a == b)
        for a, b in _representation_masks(x, target)
    ]


def _representation_masks(x: GroundSet, target: int) -> list[tuple[int, int]]:
    n = x.n_masks
    table = x.table
    zero = x.zero_mask
    out = []
    for a in range(1, n):
        if a == zero:
            continue
        row = a * n
        for b in range(a, n):
            if b != zero and table[row + b] == target:
                out.append((a, b))
    return out


@dataclass(frozen=True)
class StructuralSets:
    """The families that drive every bound on TIASS-graphs.

    ``A``: subsets with no non-trivial sumset representation.
    ``B``: subsets other than ``{0}`` that are a non-trivial summand of nothing.
    ``D``: ``A & B``.  ``Aprime``: non-empty subsets outside ``A``.
    All families hold masks of ``ground`` in ascending order.
    """

    ground: GroundSet
    A: tuple[int, ...]
    B: tuple[int, ...]
    D: tuple[int, ...]
    Aprime: tuple[int, ...]

    @property
    def rho(self) -> int:
        return len(self.A)

    @property
    def rho_prime(self) -> int:
        return len(self.B)

    @property
    def rho_double_prime(self) -> int:
        return len(self.D)

    def sets(self, name: str) -> tuple[frozenset[int], ...]:
        return tuple(self.ground.from_mask(m) for m in getattr(self, name))

    @property
    def full_in_A(self) -> bool:
        return self.ground.full_mask in self.A

    @property
    def full_in_D(self) -> bool:
        return self.ground.full_mask in self.D


def compute_structural_sets(x: GroundSet) -> StructuralSets:
    n = x.n_masks
    zero = x.zero_mask
    table = x.table
    is_sum = [False] * n
    is_summand = [False] * n
    for a in range(1, n):
        if a == zero:
            continue
        row = a * n
        for b in range(a, n):
            if b == zero:
                continue
            s = table[row + b]
            if s >= 0:
                is_sum[s] = True
                is_summand[a] = True
                is_summand[b] = True
    masks = range(1, n)
    A = tuple(m for m in masks if not is_sum[m])
    B = tuple(m for m in masks if m != zero and not is_summand[m])
    bset = set(B)
    D = tuple(m for m in A if m in bset)
    Aprime = tuple(m for m in masks if is_sum[m])
    return StructuralSets(x, A, B, D, Aprime)
