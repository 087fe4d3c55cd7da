"""Structural bounds on TIASS-graphs, computed from the ground set alone, and audits."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .errors import LabelingError
from .graphcore import Graph, degrees, is_connected, isolated_vertices, pendant_vertices
from .labeling import LabelClass, Labeling, check
from .setalg import GroundSet, StructuralSets, compute_structural_sets

AUDIT_REQUIRES_VERIFIED = "audit requires a verified labeling"


@dataclass(frozen=True)
class BoundsReport:
    ground: tuple[int, ...]
    rho: int
    rho_prime: int
    rho_double_prime: int
    full_in_A: bool
    full_in_D: bool
    min_vertices: int
    min_pendant: int
    min_zero_degree: int
    max_edges: int
    tiassi_min_vertices: int
    tiassi_min_isolated: int
    tiassi_max_edges: int
    provenance: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["ground"] = list(self.ground)
        return d

    def render(self) -> str:
        rows = [
            ("rho (|A|)", self.rho),
            ("rho' (|B|, {0} excluded)", self.rho_prime),
            ("rho'' (|D|)", self.rho_double_prime),
            ("X in A", self.full_in_A),
            ("X in D", self.full_in_D),
            ("TIASSL min vertices", self.min_vertices),
            ("TIASSL min pendant vertices", self.min_pendant),
            ("TIASSL min degree of {0}-vertex", self.min_zero_degree),
            ("TIASSL max edges", self.max_edges),
            ("TIASSI min vertices", self.tiassi_min_vertices),
            ("TIASSI min isolated vertices", self.tiassi_min_isolated),
            ("TIASSI max edges", self.tiassi_max_edges),
        ]
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{name:<{width}}  {value}" for name, value in rows)


def tiassl_bounds(x: GroundSet, sets: StructuralSets | None = None) -> BoundsReport:
    s = sets or compute_structural_sets(x)
    rho, rho1, rho2 = s.rho, s.rho_prime, s.rho_double_prime
    full_in_a, full_in_d = s.full_in_A, s.full_in_D
    power = 1 << len(x)
    min_vertices = rho if full_in_a else rho + 1
    min_pendant = rho2 if full_in_d else rho2 + 1
    return BoundsReport(
        ground=tuple(x.elements),
        rho=rho,
        rho_prime=rho1,
        rho_double_prime=rho2,
        full_in_A=full_in_a,
        full_in_D=full_in_d,
        min_vertices=min_vertices,
        min_pendant=min_pendant,
        min_zero_degree=rho1,
        max_edges=power + rho1 - rho - 1,
        tiassi_min_vertices=min_vertices,
        tiassi_min_isolated=rho2 if full_in_a else rho2 + 1,
        tiassi_max_edges=len(s.Aprime),
        provenance={
            "min_vertices": "rho (X in A)" if full_in_a else "rho + 1 (X not in A)",
            "min_pendant": "rho'' (X in D)" if full_in_d else "rho'' + 1 (X not in D)",
            "min_zero_degree": "rho' with {0} excluded from B",
            "max_edges": "2^|X| + rho' - rho - 1",
            "tiassi_min_isolated": "rho'' (X in A)" if full_in_a else "rho'' + 1 (X not in A)",
            "tiassi_max_edges": "|A'| = 2^|X| - rho - 1",
        },
    )


@dataclass(frozen=True)
class BoundCheck:
    name: str
    kind: str  # "min" or "max"
    bound: int
    actual: int | None
    ok: bool
    note: str = ""

    @property
    def tight(self) -> bool:
        return self.actual == self.bound


@dataclass(frozen=True)
class AuditResult:
    label_class: str | None
    vacuous: bool
    checks: tuple[BoundCheck, ...]
    message: str = ""

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def counterexamples(self) -> list[BoundCheck]:
        return [c for c in self.checks if not c.ok]

    def as_dict(self) -> dict:
        return {
            "class": self.label_class,
            "vacuous": self.vacuous,
            "passed": self.passed,
            "message": self.message,
            "checks": [asdict(c) for c in self.checks],
        }

    def render(self) -> str:
        if self.vacuous:
            return f"audit: vacuous pass ({self.message})"
        lines = [f"audit against {self.label_class} bounds: {'pass' if self.passed else 'COUNTEREXAMPLE'}"]
        for c in self.checks:
            rel = ">=" if c.kind == "min" else "<="
            status = "ok" if c.ok else "VIOLATED"
            if c.actual is None:
                lines.append(f"  {c.name:<26} n/a  {c.note}".rstrip())
                continue
            eq = " (equality)" if c.tight else ""
            lines.append(f"  {c.name:<26} {c.actual} {rel} {c.bound}: {status}{eq} {c.note}".rstrip())
        return "\n".join(lines)


def _bound(name: str, kind: str, bound: int, actual: int, note: str = "") -> BoundCheck:
    ok = actual >= bound if kind == "min" else actual <= bound
    return BoundCheck(name, kind, bound, actual, ok, note)


def audit(
    g: Graph,
    l: Labeling,
    report: BoundsReport | None = None,
    strict_tiassl: bool = True,
    require_verified: bool = False,
) -> AuditResult:
    """Check a concrete labeled graph against the ground-set bounds.

    Only meaningful for a verified TIASSL (or TIASSI); for anything else the
    result is a vacuous pass, or a :class:`LabelingError` with ``require_verified``.
    A failed check on a verified labeling is a counterexample to the bound.
    """
    report = report or tiassl_bounds(l.ground)
    if tuple(l.ground.elements) != report.ground:
        raise LabelingError("bounds report was computed for a different ground set")
    tiassi = check(g, l, LabelClass.TIASSI).passed
    tiassl = check(g, l, LabelClass.TIASSL, strict_tiassl).passed
    if not tiassl:
        if require_verified:
            raise LabelingError(AUDIT_REQUIRES_VERIFIED)
        return AuditResult(None, True, (), AUDIT_REQUIRES_VERIFIED)

    n_v = len(g.vertices)
    n_e = len(g.edges)
    deg = degrees(g)
    zero_v = l.vertex_with({0})
    checks = [
        _bound("vertices", "min", report.min_vertices, n_v),
        _bound("edges", "max", report.max_edges, n_e),
    ]
    if tiassi:
        checks.append(_bound("isolated vertices (TIASSI)", "min", report.tiassi_min_isolated, len(isolated_vertices(g))))
        checks.append(_bound("edges (TIASSI)", "max", report.tiassi_max_edges, n_e))
        return AuditResult(LabelClass.TIASSI.value, False, tuple(checks))

    if is_connected(g):
        zero_deg = deg[zero_v] if zero_v is not None else 0
        slack = zero_deg - report.min_zero_degree
        note = ""
        if slack <= 1:
            note = "(B excludes {0}; add 1 for the count that includes it)"
        checks.append(_bound("degree of {0}-vertex", "min", report.min_zero_degree, zero_deg, note))
        checks.append(_bound("pendant vertices", "min", report.min_pendant, len(pendant_vertices(g))))
    else:
        for name, bound in (
            ("degree of {0}-vertex", report.min_zero_degree),
            ("pendant vertices", report.min_pendant),
        ):
            checks.append(BoundCheck(name, "min", bound, None, True, "not applicable: graph is disconnected"))
    return AuditResult(LabelClass.TIASSL.value, False, tuple(checks))
