"""Acceptance criteria 1-10. Each test prints exactly one pass/fail line and
checks its wall-clock limit as part of the verdict."""

import itertools
import random
import subprocess
import sys
import time

from sumlabel.bounds import audit, tiassl_bounds
from sumlabel.construct import construct_tiass_graph
from sumlabel.formats import dumps_labeled_graph, loads_labeled_graph
from sumlabel.graphcore import enumerate_connected_graphs, enumerate_trees, is_connected, path
from sumlabel.labeling import LabelClass, Labeling, check
from sumlabel.search import (
    Status,
    decide,
    pendant_structure_ok,
    verify_no_connected_tiassi,
    verify_star_theorem,
    verify_tiasgl_implies_tiassl,
)
from sumlabel.setalg import GroundSet, compute_structural_sets, sumset
from sumlabel.topology import enumerate_topologies, is_topology

from . import oracles

CONSTRUCT_GROUNDS = [(0, 1), (0, 1, 2), (0, 1, 2, 3), (0, 1, 2, 3, 4)]


def _braces(elements):
    return "{" + ",".join(map(str, elements)) + "}"


def test_criterion_01_sumset_laws(record_criterion):
    rng = random.Random(20240601)

    def draw():
        return frozenset(rng.sample(range(13), rng.randint(1, 6)))

    pairs = [(draw(), draw(), draw()) for _ in range(10_000)]
    failures = 0
    start = time.perf_counter()
    zero = frozenset({0})
    for a, b, c in pairs:
        ab = sumset(a, b)
        ok = (
            ab == sumset(b, a)
            and sumset(ab, c) == sumset(a, sumset(b, c))
            and sumset(zero, a) == a
            and max(len(a), len(b)) <= len(ab) <= len(a) * len(b)
            and min(ab) == min(a) + min(b)
            and max(ab) == max(a) + max(b)
        )
        failures += not ok
    elapsed = time.perf_counter() - start
    passed = failures == 0 and elapsed < 1.0
    record_criterion(1, "sumset algebra laws", passed, f"10000 pairs, {failures} failures, {elapsed:.3f}s (< 1s)")
    assert passed


def test_criterion_02_topology_counts(record_criterion):
    details = []
    ok = True
    for elements, want in (((0, 1), 4), ((0, 1, 2), 29)):
        x = GroundSet(elements)
        got = {frozenset(t) for t in enumerate_topologies(x)}
        naive = set(oracles.naive_topologies(elements))
        ok &= got == naive and len(got) == want
        details.append(f"|X|={len(x)}: {len(got)} (naive {len(naive)})")
    for elements in ((0, 1, 2, 3), (0, 1, 2, 3, 4)):
        x = GroundSet(elements)
        start = time.perf_counter()
        ts = list(enumerate_topologies(x))
        elapsed = time.perf_counter() - start
        valid = all(is_topology(t, x)[0] for t in ts)
        ok &= valid and elapsed < 10.0
        details.append(f"|X|={len(x)}: {len(ts)} in {elapsed:.2f}s, all valid={valid}")
    record_criterion(2, "topology enumeration counts", ok, "; ".join(details))
    assert ok


def test_criterion_03_structural_oracle(record_criterion):
    start = time.perf_counter()
    checked = discrepancies = 0
    for k in range(5):
        for rest in itertools.combinations(range(1, 5), k):
            elements = (0,) + rest
            x = GroundSet(elements)
            s = compute_structural_sets(x)
            mine = tuple({x.from_mask(m) for m in fam} for fam in (s.A, s.B, s.D, s.Aprime))
            discrepancies += mine != tuple(oracles.structural_sets(elements))
            checked += 1
    elapsed = time.perf_counter() - start
    passed = discrepancies == 0 and checked == 16 and elapsed < 5.0
    record_criterion(3, "structural-set oracle equivalence", passed,
                     f"{checked} ground sets, {discrepancies} discrepancies, {elapsed:.2f}s (< 5s)")
    assert passed


def test_criterion_04_star_theorem(record_criterion):
    start = time.perf_counter()
    reports = [verify_star_theorem(GroundSet(e)) for e in ((0, 1), (0, 1, 2))]
    elapsed = time.perf_counter() - start
    sat_counts = [sum(r["status"] == "SAT" for r in rep.rows) for rep in reports]
    passed = all(rep.passed for rep in reports) and sat_counts == [1, 1] and elapsed < 60
    detail = ", ".join(
        f"X={_braces(rep.ground)}: {len(rep.rows)} trees, only star SAT={rep.passed}" for rep in reports
    )
    record_criterion(4, "star theorem", passed, f"{detail}; {elapsed:.2f}s (< 60s)")
    assert passed


def test_criterion_05_no_connected_tiassi(record_criterion):
    start = time.perf_counter()
    reports = [verify_no_connected_tiassi(5, GroundSet(e)) for e in ((0, 1), (0, 1, 2))]
    elapsed = time.perf_counter() - start
    passed = all(rep.passed for rep in reports) and elapsed < 300
    detail = ", ".join(
        f"X={_braces(rep.ground)}: {rep.rows[0]['unsat']}/{rep.rows[0]['graphs']} UNSAT" for rep in reports
    )
    record_criterion(5, "no connected TIASSI", passed, f"{detail}; {elapsed:.2f}s (< 300s)")
    assert passed


def test_criterion_06_tiasgl_implies_tiassl(record_criterion):
    start = time.perf_counter()
    rep = verify_tiasgl_implies_tiassl(GroundSet([0, 1]), max_n=3)
    elapsed = time.perf_counter() - start
    row = rep.rows[0]
    passed = rep.passed and not rep.counterexamples and elapsed < 60
    record_criterion(6, "TIASGL implies TIASSL", passed,
                     f"{row['labelings']} labelings, {row['tiasgl']} TIASGL, "
                     f"{len(rep.counterexamples)} exceptions, {elapsed:.2f}s (< 60s)")
    assert passed


def test_criterion_07_construction_round_trip(record_criterion):
    start = time.perf_counter()
    per_x = []
    failures = []
    shapes = {}
    for elements in CONSTRUCT_GROUNDS:
        x = GroundSet(elements)
        g, l = construct_tiass_graph(x)
        shapes[elements] = (len(g), len(g.edges))
        verified = check(g, l, LabelClass.TIASSL, strict_tiassl=True).passed
        res = audit(g, l, tiassl_bounds(x))
        ok = verified and not res.vacuous and res.passed
        per_x.append(f"X={_braces(elements)} {'ok' if ok else 'FAIL'}")
        for c in res.counterexamples:
            failures.append(f"X={_braces(elements)}: {c.name} {c.actual} vs bound {c.bound}")
        if not verified:
            failures.append(f"X={_braces(elements)}: not a strict TIASSL")
    elapsed = time.perf_counter() - start
    expected_small = shapes[(0, 1)] == (3, 2) and shapes[(0, 1, 2)] == (7, 6)
    passed = not failures and expected_small and elapsed < 120
    detail = ", ".join(per_x) + f"; {elapsed:.2f}s (< 120s)"
    if failures:
        detail += "; " + "; ".join(failures)
    record_criterion(7, "construction round-trip", passed, detail)
    assert passed, "; ".join(failures)


def test_criterion_08_bounds_tightness(record_criterion):
    x = GroundSet([0, 1])
    g = path(3)
    l = Labeling(x, {"v1": {1}, "v2": {0}, "v3": {0, 1}})
    report = tiassl_bounds(x)
    res = audit(g, l, report)
    checks = {c.name: c for c in res.checks}
    passed = (
        report.max_edges == 2
        and report.min_vertices == 3
        and checks["edges"].tight
        and checks["vertices"].tight
        and res.passed
    )
    record_criterion(8, "bounds tightness on P_3", passed,
                     f"edges {len(g.edges)} = max_edges {report.max_edges}, "
                     f"vertices {len(g)} = min_vertices {report.min_vertices}")
    assert passed


def _tiassl_witnesses():
    """Every SAT TIASSL witness the suite's searches and constructions produce."""
    out = []
    for elements in ((0, 1), (0, 1, 2)):
        x = GroundSet(elements)
        for n in range(1, 7):
            for g in enumerate_connected_graphs(n):
                res = decide(g, x, LabelClass.TIASSL)
                if res.status is Status.SAT:
                    out.append((g, res.witness))
        out.extend(_star_theorem_trees(x))
    for elements in CONSTRUCT_GROUNDS:
        out.append(construct_tiass_graph(GroundSet(elements)))
    return out


def _star_theorem_trees(x):
    for t in enumerate_trees(x.n_masks - 1):
        res = decide(t, x, LabelClass.TIASSL, vertex_family=x.subsets())
        if res.sat:
            yield t, res.witness


def test_criterion_09_pendant_structure(record_criterion):
    witnesses = _tiassl_witnesses()
    connected = [(g, l) for g, l in witnesses if is_connected(g)]
    bad = [(g, l) for g, l in connected if not pendant_structure_ok(g, l)]
    passed = bool(connected) and not bad and len(connected) == len(witnesses)
    record_criterion(9, "pendant / X-vertex structure", passed,
                     f"{len(connected)} connected witnesses, {len(bad)} exceptions")
    assert passed


def _cli(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "sumlabel.cli", *args],
                          input=stdin, capture_output=True, text=True)


def test_criterion_10_cli_pipeline(record_criterion, tmp_path):
    per_x = []
    failures = []
    for elements in CONSTRUCT_GROUNDS:
        ground = ",".join(map(str, elements))
        doc = tmp_path / f"x{len(elements)}.json"
        made = _cli("construct", ground, "--out", str(doc))
        analyzed = _cli("analyze", str(doc))
        text = doc.read_text() if doc.exists() else ""
        round_trip = bool(text) and dumps_labeled_graph(*loads_labeled_graph(text)) == text
        ok = made.returncode == 0 and analyzed.returncode == 0 and round_trip
        per_x.append(f"X={_braces(elements)} analyze exit {analyzed.returncode}, round-trip {round_trip}")
        if not ok:
            violated = [" ".join(ln.split()) for ln in analyzed.stdout.splitlines() if "VIOLATED" in ln]
            failures.append(f"X={_braces(elements)}: " + ("; ".join(violated) or analyzed.stderr.strip()))
    passed = not failures
    detail = ", ".join(per_x)
    if failures:
        detail += "; " + "; ".join(failures)
    record_criterion(10, "CLI construct -> analyze pipeline", passed, detail)
    assert passed, "; ".join(failures)
