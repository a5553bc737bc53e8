"""Compiled vs pure-Python enumeration kernels on flow-lattice workloads.

    python benchmarks/bench_kernels.py [--edges 7] [--norm 10] [--repeat 3]

Both backends run the same Fincke-Pohst search and must return identical
results; the script checks that before reporting times.
"""

import argparse
import os
import sys
import time

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from graph_family import bridgeless_family  # noqa: E402
from knotlattice import _kernels_py  # noqa: E402
from knotlattice.lattice import flow_lattice  # noqa: E402
from knotlattice.taitgraph import PlaneMultigraph  # noqa: E402

try:
    from knotlattice import _kernels as compiled
except ImportError:
    compiled = None


def workload(max_edges):
    grams = []
    for n, edges in bridgeless_family(max_edges):
        F = flow_lattice(PlaneMultigraph.from_edges(n, edges))
        if F.rank:
            grams.append(np.array(F.gram, dtype=np.int64))
    return grams


def run(impl, grams, norm):
    results = []
    for g in grams:
        vecs = impl.short_vectors(g, norm)
        results.append((vecs, impl.batch_flags(g, vecs)))
    return results


def best_of(impl, grams, norm, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = run(impl, grams, norm)
        times.append(time.perf_counter() - start)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--edges", type=int, default=7)
    ap.add_argument("--norm", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    grams = workload(args.edges)
    t_py, out_py = best_of(_kernels_py, grams, args.norm, args.repeat)
    vectors = sum(len(v) for v, _ in out_py)
    print(f"{len(grams)} lattices, {vectors} vectors of norm <= {args.norm}")
    print(f"python  {t_py:8.3f} s")
    if compiled is None:
        print("cython  (extension not built)")
        return
    t_cy, out_cy = best_of(compiled, grams, args.norm, args.repeat)
    for (va, (ia, sa)), (vb, (ib, sb)) in zip(out_py, out_cy):
        assert (va == vb).all() and (ia == ib).all() and (sa == sb).all(), "backends disagree"
    print(f"cython  {t_cy:8.3f} s")
    print(f"speedup {t_py / t_cy:8.1f}x")


if __name__ == "__main__":
    main()
