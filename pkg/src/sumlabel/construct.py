"""Constructive existence: build a graph and a TIASSL for a given ground set."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InadmissibleTopologyError
from .graphcore import Graph, components
from .labeling import Labeling
from .setalg import GroundSet, StructuralSets, compute_structural_sets, format_set
from .topology import DEFAULT_ENUMERATION_LIMIT, _check_masks, topology_masks


def _cover_pair(x: GroundSet, members: list[int], target: int) -> tuple[int, int] | None:
    """Canonically smallest ``(a, b)``, ``a < b``, both in ``members``, with ``a + b == target``."""
    n = x.n_masks
    table = x.table
    for i, a in enumerate(members):
        row = a * n
        for b in members[i + 1:]:
            if table[row + b] == target:
                return a, b
    return None


def _admissibility_gap(x: GroundSet, fam: frozenset[int], sets: StructuralSets) -> int | None:
    """First subset that makes ``fam`` unusable, or None if admissible."""
    zero = x.zero_mask
    if zero not in fam:
        return zero
    for m in sets.A:
        if m not in fam:
            return m
    members = sorted(m for m in fam if m)
    for c in x.nonempty_masks():
        if c not in fam and _cover_pair(x, members, c) is None:
            return c
    return None


def admissible_topology_masks(x: GroundSet, limit: int = DEFAULT_ENUMERATION_LIMIT) -> list[frozenset[int]]:
    sets = compute_structural_sets(x)
    required = [x.zero_mask, *sets.A]
    return [
        fam for fam in topology_masks(x, required, limit)
        if _admissibility_gap(x, fam, sets) is None
    ]


def admissible_topologies(
    x: GroundSet, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[tuple[frozenset[int], ...]]:
    """Topologies whose open sets, as vertex labels, can be completed to a TIASSL.

    Each contains {0} and every subset with no non-trivial representation, and
    every subset outside it is a sum of two distinct open sets.
    """
    for fam in admissible_topology_masks(x, limit):
        yield tuple(x.from_mask(m) for m in sorted(fam))


def _vertex_id(i: int) -> str:
    return f"v{i}"


def build_from_topology(t: Iterable[Iterable[int]], x: GroundSet) -> tuple[Graph, Labeling]:
    """Realise the admissible topology ``t`` as a connected graph with a strict TIASSL.

    One vertex per non-empty open set; vertices labelled by non-summands (and X)
    hang off the {0}-vertex; every other subset gets an edge between the
    canonically first pair of distinct open sets summing to it; components left
    apart from the {0}-vertex are joined to it.
    """
    fam = frozenset(x.to_mask(s) for s in t) | {0}
    ok, w = _check_masks(fam, x.full_mask)
    if not ok:
        raise InadmissibleTopologyError(f"not a topology on {x}")
    sets = compute_structural_sets(x)
    gap = _admissibility_gap(x, fam, sets)
    if gap is not None:
        s = x.from_mask(gap)
        raise InadmissibleTopologyError(
            f"inadmissible topology: {format_set(s, True)} cannot be covered", uncovered=s
        )

    members = sorted(m for m in fam if m)
    vid = {m: _vertex_id(i) for i, m in enumerate(members, 1)}
    zero = x.zero_mask
    center = vid[zero]
    edges: list[tuple[str, str]] = []
    hang = set(sets.B) | {x.full_mask}
    for m in members:
        if m != zero and m in hang:
            edges.append((center, vid[m]))
    for c in x.nonempty_masks():
        if c in fam:
            continue
        a, b = _cover_pair(x, members, c)
        edges.append((vid[a], vid[b]))

    g = Graph([vid[m] for m in members], edges)
    for comp in components(g):
        if center not in comp:
            first = min(comp, key=lambda v: members[int(v[1:]) - 1])
            edges.append((center, first))
    g = Graph([vid[m] for m in members], edges)
    lab = Labeling(x, {vid[m]: x.from_mask(m) for m in members})
    return g, lab


def construct_tiass_graph(x: GroundSet, limit: int = DEFAULT_ENUMERATION_LIMIT) -> tuple[Graph, Labeling]:
    """Witness for the first admissible topology in canonical order.

    The discrete topology is always admissible, so this never comes back empty.
    """
    fams = admissible_topology_masks(x, limit)
    first = fams[0]
    return build_from_topology([x.from_mask(m) for m in first], x)
