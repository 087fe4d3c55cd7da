"""Compare the compiled and pure-Python search kernels on fixed workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends receive identical arguments; the script checks that they return
identical results before reporting timings.
"""

from __future__ import annotations

import argparse
import time

from sumlabel import _pykernels
from sumlabel.graphcore import cycle, enumerate_connected_graphs, path, star
from sumlabel.labeling import LabelClass
from sumlabel.search import class_flags, twin_chain, variable_order
from sumlabel.setalg import GroundSet

try:
    from sumlabel import _ckernels
except ImportError:
    _ckernels = None


def search_args(g, x, cls):
    order = variable_order(g)
    allowed = [0] + [1] * (x.n_masks - 1)
    anchors = sorted(range(len(g)), key=order.index)
    return (len(g), g.adjacency(), order, x.table, x.n_masks, class_flags(cls), allowed,
            anchors, -1, twin_chain(g, order))


def workloads():
    x4 = GroundSet([0, 1, 2, 3])
    x3 = GroundSet([0, 1, 2])
    yield "sumset table |X|=6", "sumset_table", [([0, 1, 2, 3, 4, 5],)]
    yield "TIASSL path(9) X={0,1,2,3}", "search", [search_args(path(9), x4, LabelClass.TIASSL)]
    yield "TIASSL cycle(9) X={0,1,2,3}", "search", [search_args(cycle(9), x4, LabelClass.TIASSL)]
    yield "TIASSL star(14) X={0,1,2,3}", "search", [search_args(star(14), x4, LabelClass.TIASSL)]
    sweep = [search_args(g, x3, LabelClass.TIASSI) for n in range(1, 7) for g in enumerate_connected_graphs(n)]
    yield f"TIASSI sweep, {len(sweep)} graphs n<=6 X={{0,1,2}}", "search", sweep


def timed(fn, calls, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = [fn(*args) for args in calls]
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return
    print(f"{'workload':<44} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, attr, calls in workloads():
        tp, rp = timed(getattr(_pykernels, attr), calls, args.repeat)
        tc, rc = timed(getattr(_ckernels, attr), calls, args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:<44} {tp * 1e3:>8.2f}ms {tc * 1e3:>8.2f}ms {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
