"""Decision procedure for labeling classes, and exhaustive theorem drivers."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from . import kernels
from .errors import SumLabelError
from .graphcore import (
    Graph,
    degrees,
    enumerate_connected_graphs,
    enumerate_graphs,
    enumerate_trees,
    automorphism_orbits,
    is_star,
    pendant_vertices,
)
from .labeling import LabelClass, Labeling, check, classify
from .setalg import GroundSet

DEFAULT_BUDGET = 5_000_000


class Status(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    INCONCLUSIVE = "inconclusive: budget"


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    label_class: LabelClass
    witness: Labeling | None = None
    nodes: int = 0
    seconds: float = 0.0
    backend: str = kernels.BACKEND

    @property
    def sat(self) -> bool:
        return self.status is Status.SAT

    def as_dict(self) -> dict:
        return {
            "status": self.status.value,
            "class": self.label_class.value,
            "stats": {"nodes": self.nodes, "seconds": round(self.seconds, 6), "backend": self.backend},
            "witness": None if self.witness is None else {
                v: sorted(s) for v, s in self.witness.labels.items()
            },
        }


_CLASS_FLAGS = {
    LabelClass.IASL: 0,
    LabelClass.IASI: kernels.IASI,
    LabelClass.TIASL: kernels.TOPO,
    LabelClass.IASSL: kernels.SEQ,
    LabelClass.IASGL: kernels.GRACEFUL,
    LabelClass.TIASGL: kernels.GRACEFUL | kernels.TOPO,
    LabelClass.TIASSL: kernels.TOPO | kernels.SEQ,
    LabelClass.TIASSI: kernels.TOPO | kernels.SEQ | kernels.IASI | kernels.FSTAR,
}


def class_flags(cls: LabelClass, strict: bool = True) -> int:
    flags = _CLASS_FLAGS[cls]
    if cls is LabelClass.TIASSL and strict:
        flags |= kernels.IASI
    if flags & kernels.SEQ:
        # {0} can only ever be a vertex label, so branch on its vertex first
        flags |= kernels.ANCHOR
    return flags


def variable_order(g: Graph) -> list[int]:
    deg = degrees(g)
    return sorted(range(len(g.vertices)), key=lambda i: (-deg[g.vertices[i]], i))


def twin_chain(g: Graph, order: list[int]) -> list[int]:
    """For each vertex, the previous vertex in ``order`` with the same open or
    closed neighbourhood (swapping the two is an automorphism), else -1."""
    adj = [frozenset(nb) for nb in g.adjacency()]
    prev = [-1] * len(order)
    last: dict[tuple, int] = {}
    for v in order:
        for key in (("open", adj[v]), ("closed", adj[v] | {v})):
            if key in last:
                prev[v] = last[key]
                break
        last[("open", adj[v])] = v
        last[("closed", adj[v] | {v})] = v
    return prev


def decide(
    g: Graph,
    x: GroundSet,
    cls: LabelClass | str,
    strict: bool = True,
    budget: int | None = DEFAULT_BUDGET,
    vertex_family: Iterable[Iterable[int]] | None = None,
    use_symmetry: bool = True,
) -> SearchOutcome:
    """Does ``g`` admit a labeling of class ``cls`` over ``x``?

    Complete backtracking over injective assignments of non-empty subsets; UNSAT
    is only returned after exhausting the pruned space, a spent node budget gives
    ``Status.INCONCLUSIVE``. ``vertex_family`` restricts the allowed vertex labels.
    """
    if isinstance(cls, str) and not isinstance(cls, LabelClass):
        cls = LabelClass.parse(cls)
    n = len(g.vertices)
    allowed = [0] * x.n_masks
    if vertex_family is None:
        for m in x.nonempty_masks():
            allowed[m] = 1
    else:
        for s in vertex_family:
            m = x.to_mask(s)
            if m:
                allowed[m] = 1
    flags = class_flags(cls, strict)
    order = variable_order(g)
    if flags & kernels.ANCHOR:
        pos = {v: i for i, v in enumerate(g.vertices)}
        if use_symmetry:
            reps = [pos[orbit[0]] for orbit in automorphism_orbits(g)]
        else:
            reps = list(range(n))
        rank = {v: k for k, v in enumerate(order)}
        anchors = sorted(reps, key=rank.__getitem__)
    else:
        anchors = []
    twins = twin_chain(g, order) if use_symmetry else None

    start = time.perf_counter()
    status, labels, nodes = kernels.search(
        n, g.adjacency(), order, x.table, x.n_masks, flags, allowed, anchors,
        -1 if budget is None else budget, twins,
    )
    elapsed = time.perf_counter() - start
    if status == kernels.SAT:
        witness = Labeling(x, {v: x.from_mask(m) for v, m in zip(g.vertices, labels)})
        verdict = check(g, witness, cls, strict)
        if not verdict.passed:
            raise AssertionError(f"search produced an invalid {cls.value} witness: {verdict.witness}")
        return SearchOutcome(Status.SAT, cls, witness, nodes, elapsed)
    if status == kernels.BUDGET:
        return SearchOutcome(Status.INCONCLUSIVE, cls, None, nodes, elapsed)
    return SearchOutcome(Status.UNSAT, cls, None, nodes, elapsed)


def all_labelings(g: Graph, x: GroundSet, vertex_family=None):
    """Every injective labeling of ``g`` by non-empty subsets of ``x`` (no pruning)."""
    pool = x.subsets() if vertex_family is None else [frozenset(s) for s in vertex_family if s]
    for combo in itertools.permutations(pool, len(g.vertices)):
        yield Labeling(x, dict(zip(g.vertices, combo)))


def brute_force_decide(g: Graph, x: GroundSet, cls: LabelClass | str, strict: bool = True,
                       vertex_family=None) -> Labeling | None:
    """Unpruned reference: first labeling in permutation order that passes ``check``."""
    for l in all_labelings(g, x, vertex_family):
        if check(g, l, cls, strict).passed:
            return l
    return None


def pendant_structure_ok(g: Graph, l: Labeling) -> bool:
    """The X-labelled vertex is pendant with its neighbour labelled {0}, and pendants exist."""
    if not pendant_vertices(g):
        return False
    vx = l.vertex_with(l.ground.as_set)
    if vx is None:
        return False
    nb = g.neighbors(vx)
    return len(nb) == 1 and l[nb[0]] == frozenset({0})


# -- theorem drivers ---------------------------------------------------------

@dataclass
class TheoremReport:
    name: str
    ground: tuple[int, ...]
    passed: bool = True
    rows: list[dict] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return {
            "theorem": self.name,
            "ground_set": list(self.ground),
            "passed": self.passed,
            "rows": self.rows,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
            "seconds": round(self.seconds, 3),
        }

    def render(self) -> str:
        head = f"[{'PASS' if self.passed else 'FAIL'}] {self.name} over X={set(self.ground)} ({self.seconds:.2f}s)"
        lines = [head]
        for r in self.rows:
            lines.append("  " + ", ".join(f"{k}={v}" for k, v in r.items()))
        for c in self.counterexamples:
            lines.append("  COUNTEREXAMPLE " + ", ".join(f"{k}={v}" for k, v in c.items()))
        lines.extend("  note: " + nt for nt in self.notes)
        return "\n".join(lines)


def _edges_str(g: Graph) -> str:
    return " ".join(f"{a}-{b}" for a, b in g.sorted_edges)


def verify_star_theorem(x: GroundSet, budget: int | None = DEFAULT_BUDGET) -> TheoremReport:
    """Discrete-topology TIASSL exists on a tree with 2^|X|-1 vertices iff it is the star."""
    if len(x) > 3:
        raise SumLabelError("star theorem sweep supports |X| <= 3")
    start = time.perf_counter()
    rep = TheoremReport("discrete-topology TIASSL iff star K_{1,2^|X|-2}", tuple(x.elements))
    n = x.n_masks - 1
    for t in enumerate_trees(n):
        out = decide(t, x, LabelClass.TIASSL, strict=True, budget=budget, vertex_family=x.subsets())
        star = is_star(t)
        rep.rows.append({"tree": _edges_str(t), "star": star, "status": out.status.value})
        if out.status is Status.INCONCLUSIVE:
            rep.passed = False
            rep.notes.append(f"budget exhausted on tree {_edges_str(t)}")
        elif out.sat != star:
            rep.passed = False
            rep.counterexamples.append({"tree": _edges_str(t), "star": star, "status": out.status.value})
    rep.seconds = time.perf_counter() - start
    return rep


def verify_no_connected_tiassi(max_n: int, x: GroundSet, budget: int | None = DEFAULT_BUDGET) -> TheoremReport:
    """decide(TIASSI) is UNSAT for every connected graph class on at most ``max_n`` vertices."""
    if max_n > 6 or len(x) > 3:
        raise SumLabelError("no-connected-TIASSI sweep supports max_n <= 6 and |X| <= 3")
    start = time.perf_counter()
    rep = TheoremReport("no connected graph admits a TIASSI", tuple(x.elements))
    counts = {"graphs": 0, "unsat": 0}
    for n in range(1, max_n + 1):
        for g in enumerate_connected_graphs(n):
            counts["graphs"] += 1
            out = decide(g, x, LabelClass.TIASSI, budget=budget)
            if out.status is Status.UNSAT:
                counts["unsat"] += 1
            elif out.status is Status.INCONCLUSIVE:
                rep.passed = False
                rep.notes.append(f"budget exhausted on n={n} graph {_edges_str(g)}")
            else:
                rep.passed = False
                rep.counterexamples.append({
                    "graph": _edges_str(g),
                    "witness": {v: sorted(s) for v, s in out.witness.labels.items()},
                })
    rep.rows.append({"max_n": max_n, **counts})
    rep.seconds = time.perf_counter() - start
    return rep


def disconnected_tiassi_probe(x: GroundSet, budget: int | None = DEFAULT_BUDGET) -> list[tuple[Graph, SearchOutcome]]:
    """TIASSI on disconnected graphs is not ruled out; probe P_3 plus k isolated
    vertices and the edgeless graph on 2^|X| - 1 vertices."""
    out = []
    top = x.n_masks - 1
    for k in range(0, top - 2):
        vs = [f"v{i}" for i in range(1, 4 + k)]
        g = Graph(vs, [(vs[0], vs[1]), (vs[1], vs[2])])
        out.append((g, decide(g, x, LabelClass.TIASSI, budget=budget)))
    g = Graph([f"v{i}" for i in range(1, top + 1)])
    out.append((g, decide(g, x, LabelClass.TIASSI, budget=budget)))
    return out


def verify_tiasgl_implies_tiassl(
    x: GroundSet,
    max_n: int = 3,
    samples: Iterable[tuple[Graph, Labeling]] = (),
) -> TheoremReport:
    """Every labeling that passes TIASGL also passes TIASSL.

    Exhaustive over every graph on 1..max_n vertices and every injective labeling,
    plus any explicit ``samples``.
    """
    if len(x) > 3:
        raise SumLabelError("TIASGL sweep supports |X| <= 3")
    start = time.perf_counter()
    rep = TheoremReport("every TIASGL is a TIASSL", tuple(x.elements))
    seen = tiasgl = 0

    def visit(g, l):
        nonlocal seen, tiasgl
        seen += 1
        r = classify(g, l)
        if r[LabelClass.TIASGL].passed:
            tiasgl += 1
            if not r[LabelClass.TIASSL].passed:
                rep.passed = False
                rep.counterexamples.append({
                    "graph": _edges_str(g),
                    "labels": {v: sorted(s) for v, s in l.labels.items()},
                    "witness": r[LabelClass.TIASSL].witness,
                })

    for n in range(1, max_n + 1):
        if n > x.n_masks - 1:
            break
        for g in enumerate_graphs(n):
            for l in all_labelings(g, x):
                visit(g, l)
    for g, l in samples:
        visit(g, l)
    rep.rows.append({"max_n": max_n, "labelings": seen, "tiasgl": tiasgl})
    rep.seconds = time.perf_counter() - start
    return rep
