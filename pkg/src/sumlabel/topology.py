"""Topologies on a finite ground set: verification and enumeration."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import EnumerationLimitError, SumLabelError
from .setalg import GroundSet, format_set

DEFAULT_ENUMERATION_LIMIT = 5


def family_key(masks: Iterable[int]) -> tuple:
    """Canonical order on families: fewer members first, then member masks."""
    ms = sorted(masks)
    return (len(ms), ms)


def _check_masks(family: Iterable[int], full: int) -> tuple[bool, tuple | None]:
    fam = sorted(set(family))
    present = set(fam)
    if 0 not in present:
        return False, ("missing", 0)
    if full not in present:
        return False, ("missing", full)
    for i, a in enumerate(fam):
        for b in fam[i + 1:]:
            if a | b not in present:
                return False, ("union", a, b)
            if a & b not in present:
                return False, ("intersection", a, b)
    return True, None


def is_topology(family: Iterable[Iterable[int]], x: GroundSet) -> tuple[bool, str | None]:
    """Check that ``family`` (subsets of ``x``) is a topology on ``x``.

    Returns ``(ok, witness)``. The witness names the first violation in canonical
    order: a missing ``{}``/``X``, or a pair whose union/intersection is absent.
    """
    masks = []
    for s in family:
        if not x.contains_set(s):
            raise SumLabelError(f"{format_set(s, braces=True)} is not a subset of ground set {x}")
        masks.append(x.to_mask(s))
    ok, w = _check_masks(masks, x.full_mask)
    return ok, (None if ok else describe_violation(w, x))


def describe_violation(w: tuple, x: GroundSet) -> str:
    if w[0] == "missing":
        what = "X" if w[1] == x.full_mask else "empty set"
        return f"{what} missing"
    kind, a, b = w
    op = a | b if kind == "union" else a & b
    return (
        f"{kind} of {format_set(x.from_mask(a), True)} and {format_set(x.from_mask(b), True)}"
        f" = {format_set(x.from_mask(op), True)} missing"
    )


def closure_masks(seed: Iterable[int], full: int) -> frozenset[int]:
    """Smallest family containing ``seed``, the empty set and ``full``, closed under | and &."""
    fam = set(seed)
    fam.add(0)
    fam.add(full)
    return frozenset(_close(set(), fam))


def _close(closed: set[int], new: set[int]) -> set[int]:
    # ``closed`` is already closed; fold in ``new`` pairwise until stable
    fam = set(closed)
    queue = [m for m in new if m not in fam]
    fam.update(queue)
    while queue:
        m = queue.pop()
        for o in list(fam):
            for r in (m | o, m & o):
                if r not in fam:
                    fam.add(r)
                    queue.append(r)
    return fam


def _enumerate_masks(k: int, required: Iterable[int]) -> list[frozenset[int]]:
    """Every topology (as a mask family) containing ``required``.

    Close-by-one depth-first completion: each closed family is reached exactly
    once because a branch on candidate ``j`` is kept only when its closure adds
    no candidate earlier than ``j``.
    """
    full = (1 << k) - 1
    start = closure_masks(required, full)
    cands = [m for m in range(1, full) if m not in start]
    out: list[frozenset[int]] = []

    def walk(fam: frozenset[int], begin: int) -> None:
        out.append(fam)
        for j in range(begin, len(cands)):
            m = cands[j]
            if m in fam:
                continue
            nxt = _close(set(fam), {m})
            if any(cands[i] in nxt and cands[i] not in fam for i in range(j)):
                continue
            walk(frozenset(nxt), j + 1)

    walk(start, 0)
    out.sort(key=family_key)
    return out


def enumerate_topologies(
    x: GroundSet,
    required: Iterable[Iterable[int]] = (),
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> Iterator[tuple[frozenset[int], ...]]:
    """Yield every topology on ``x`` containing ``required``, in canonical order.

    Each topology is a tuple of subsets including the empty set, ordered by mask.
    """
    if len(x) > limit:
        raise EnumerationLimitError("ground set too large for exhaustive topology enumeration")
    req = []
    for s in required:
        if not x.contains_set(s):
            raise SumLabelError(f"{format_set(s, braces=True)} is not a subset of ground set {x}")
        req.append(x.to_mask(s))
    for fam in _enumerate_masks(len(x), req):
        yield tuple(x.from_mask(m) for m in sorted(fam))


def topology_masks(x: GroundSet, required: Iterable[int] = (), limit: int = DEFAULT_ENUMERATION_LIMIT):
    """Mask-level variant of :func:`enumerate_topologies` for internal callers."""
    if len(x) > limit:
        raise EnumerationLimitError("ground set too large for exhaustive topology enumeration")
    return _enumerate_masks(len(x), required)


def discrete(x: GroundSet) -> tuple[frozenset[int], ...]:
    return tuple(x.from_mask(m) for m in range(x.n_masks))


def indiscrete(x: GroundSet) -> tuple[frozenset[int], ...]:
    return (frozenset(), x.as_set)
