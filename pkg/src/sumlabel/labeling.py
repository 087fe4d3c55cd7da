"""Set-labelings of graphs and the checks for each labeling class."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .errors import LabelingError
from .graphcore import Graph
from .setalg import GroundSet, format_set, intset, sumset
from .topology import _check_masks, describe_violation


class LabelClass(str, Enum):
    IASL = "IASL"
    IASI = "IASI"
    TIASL = "TIASL"
    IASSL = "IASSL"
    IASGL = "IASGL"
    TIASGL = "TIASGL"
    TIASSL = "TIASSL"
    TIASSI = "TIASSI"

    @classmethod
    def parse(cls, text: str) -> "LabelClass":
        try:
            return cls(text.strip().upper())
        except ValueError:
            names = ", ".join(c.value.lower() for c in cls)
            raise LabelingError(f"unknown labeling class {text!r} (expected one of {names})") from None


ALL_CLASSES = tuple(LabelClass)


@dataclass(frozen=True)
class Labeling:
    """Injective map from vertex identifiers to non-empty subsets of the ground set."""

    ground: GroundSet
    labels: Mapping[str, frozenset[int]]

    def __init__(self, ground: GroundSet, labels: Mapping[str, Iterable[int]]):
        clean = {}
        seen = {}
        for v, lab in labels.items():
            s = intset(lab)
            if not s:
                raise LabelingError(f"vertex {v!r} has an empty label")
            if not ground.contains_set(s):
                raise LabelingError(
                    f"label {format_set(s, True)} of {v!r} is not a subset of ground set {ground}"
                )
            if s in seen:
                raise LabelingError(
                    f"labels must be injective: {seen[s]!r} and {v!r} share {format_set(s, True)}"
                )
            seen[s] = v
            clean[str(v)] = s
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "labels", dict(clean))

    def __getitem__(self, v: str) -> frozenset[int]:
        try:
            return self.labels[v]
        except KeyError:
            raise LabelingError(f"vertex {v!r} is unlabeled") from None

    def vertex_with(self, s: Iterable[int]) -> str | None:
        s = frozenset(s)
        for v, lab in self.labels.items():
            if lab == s:
                return v
        return None


def induced_edge_label(l: Labeling, u: str, v: str) -> frozenset[int]:
    """f+(uv): the sumset of the end labels; may leave the ground set."""
    if u == v:
        raise LabelingError("an edge needs two distinct endpoints")
    return sumset(l[u], l[v])


@dataclass(frozen=True)
class Extension:
    """f restricted to vertices plus the induced edge labels f+."""

    vertex_part: Mapping[str, frozenset[int]]
    edge_part: Mapping[tuple[str, str], frozenset[int]]


def extend(g: Graph, l: Labeling) -> Extension:
    _require_cover(g, l)
    return Extension(
        dict(l.labels),
        {e: induced_edge_label(l, *e) for e in g.sorted_edges},
    )


def _require_cover(g: Graph, l: Labeling) -> None:
    if set(g.vertices) != set(l.labels):
        missing = sorted(set(g.vertices) - set(l.labels))
        extra = sorted(set(l.labels) - set(g.vertices))
        raise LabelingError(f"labeling does not match graph (unlabeled: {missing}, unknown: {extra})")


@dataclass(frozen=True)
class Verdict:
    cls: LabelClass
    passed: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.passed


class _Evaluation:
    """Everything the class checks share, computed once per (graph, labeling)."""

    def __init__(self, g: Graph, l: Labeling):
        _require_cover(g, l)
        x = l.ground
        self.g = g
        self.l = l
        self.x = x
        self.vmask = {v: x.to_mask(l.labels[v]) for v in g.vertices}
        self.edges = g.sorted_edges
        self.escape = None
        self.emask: dict[tuple[str, str], int] = {}
        for e in self.edges:
            s = induced_edge_label(l, *e)
            if not x.contains_set(s):
                if self.escape is None:
                    out = sorted(v for v in s if v not in x)
                    self.escape = (
                        f"edge {e[0]}-{e[1]}: {format_set(l[e[0]], True)} + "
                        f"{format_set(l[e[1]], True)} = {format_set(s, True)} "
                        f"leaves X (offending {format_set(out, True)})"
                    )
                continue
            self.emask[e] = x.to_mask(s)
        self._cache: dict[str, Verdict] = {}

    def _iasl(self):
        return self.escape

    def _iasi(self):
        first = {}
        for e in self.edges:
            m = self.emask.get(e)
            if m is None:
                continue
            if m in first:
                o = first[m]
                return (
                    f"edges {o[0]}-{o[1]} and {e[0]}-{e[1]} share label "
                    f"{format_set(self.x.from_mask(m), True)}"
                )
            first[m] = e
        return None

    def _topology(self):
        ok, w = _check_masks(list(self.vmask.values()) + [0], self.x.full_mask)
        return None if ok else "vertex labels with {} are not a topology: " + describe_violation(w, self.x)

    def _missing(self, covered: set[int], exclude: Iterable[int] = ()):
        skip = set(exclude)
        for m in self.x.nonempty_masks():
            if m not in covered and m not in skip:
                return m
        return None

    def _sequential(self):
        covered = set(self.vmask.values()) | set(self.emask.values())
        m = self._missing(covered)
        if m is None:
            return None
        return f"subset {format_set(self.x.from_mask(m), True)} labels no vertex or edge"

    def _graceful(self):
        covered = set(self.emask.values())
        zero = self.x.zero_mask
        if zero in covered:
            return "an edge carries {0}"
        m = self._missing(covered, exclude=[zero])
        if m is None:
            return None
        return f"subset {format_set(self.x.from_mask(m), True)} labels no edge"

    def _fstar_injective(self):
        inv = {m: f"vertex {v}" for v, m in self.vmask.items()}
        for e in self.edges:
            m = self.emask[e]
            if m in inv:
                return (
                    f"{inv[m]} and edge {e[0]}-{e[1]} share label "
                    f"{format_set(self.x.from_mask(m), True)}"
                )
            inv[m] = f"edge {e[0]}-{e[1]}"
        return None

    def verdict(self, cls: LabelClass, strict: bool = True) -> Verdict:
        key = f"{cls.value}:{strict}"
        if key not in self._cache:
            self._cache[key] = self._compute(cls, strict)
        return self._cache[key]

    def _compute(self, cls: LabelClass, strict: bool) -> Verdict:
        C = LabelClass
        if cls is C.IASL:
            steps = [self._iasl]
        elif cls is C.IASI:
            steps = [self._iasl, self._iasi]
        elif cls is C.TIASL:
            steps = [self._iasl, self._topology]
        elif cls is C.IASSL:
            steps = [self._iasl, self._sequential]
        elif cls is C.IASGL:
            steps = [self._iasl, self._graceful]
        elif cls is C.TIASGL:
            steps = [self._iasl, self._graceful, self._topology]
        elif cls is C.TIASSL:
            steps = [self._iasl, self._topology, self._sequential]
            if strict:
                steps.append(self._iasi)
        else:
            steps = [self._iasl, self._topology, self._sequential, self._iasi, self._fstar_injective]
        for step in steps:
            w = step()
            if w is not None:
                return Verdict(cls, False, w)
        return Verdict(cls, True)


def check(g: Graph, l: Labeling, cls: LabelClass | str, strict_tiassl: bool = True) -> Verdict:
    if isinstance(cls, str) and not isinstance(cls, LabelClass):
        cls = LabelClass.parse(cls)
    return _Evaluation(g, l).verdict(cls, strict_tiassl)


@dataclass(frozen=True)
class ClassificationReport:
    verdicts: tuple[Verdict, ...]
    strict_tiassl: bool = True

    def __getitem__(self, cls: LabelClass | str) -> Verdict:
        if isinstance(cls, str) and not isinstance(cls, LabelClass):
            cls = LabelClass.parse(cls)
        for v in self.verdicts:
            if v.cls is cls:
                return v
        raise KeyError(cls)

    def passed(self) -> set[LabelClass]:
        return {v.cls for v in self.verdicts if v.passed}

    def as_dict(self) -> dict:
        return {
            "strict_tiassl": self.strict_tiassl,
            "classes": {
                v.cls.value: {"pass": v.passed, "witness": v.witness} for v in self.verdicts
            },
        }

    def render(self) -> str:
        lines = [f"{'class':<8} verdict  witness"]
        for v in self.verdicts:
            mark = "pass" if v.passed else "FAIL"
            lines.append(f"{v.cls.value:<8} {mark:<8} {v.witness or ''}".rstrip())
        return "\n".join(lines)


def classify(g: Graph, l: Labeling, strict_tiassl: bool = True) -> ClassificationReport:
    ev = _Evaluation(g, l)
    return ClassificationReport(
        tuple(ev.verdict(c, strict_tiassl) for c in ALL_CLASSES), strict_tiassl
    )
