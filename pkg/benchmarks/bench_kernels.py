"""Time the numba kernels against their numpy twins.

Run: python benchmarks/bench_kernels.py [--repeat 3] [--max-n 9]

Both backends are loaded in-process (the env flag only picks the default),
so one run covers both. Numba times exclude compilation: every job runs once
before it is timed.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from gracelab import _kernels
from gracelab.labeling import beta, cycle_union
from gracelab.poly import build_edge_polynomial, build_vertex_vandermonde, canonical_rep_is_nonzero, lcm
from gracelab.transform import Transformation


def _best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _graceful_count(f, backend):
    perms = _kernels.lex_permutations(f.n).astype(np.int64)
    return int((_kernels.get_backend(backend).distinct_label_counts(f.as_array(), perms) == f.n).sum())


def build_jobs(max_n):
    rng = np.random.default_rng(0)
    jobs = []
    for n in range(6, max_n + 1):
        f = Transformation(tuple(int(v) for v in rng.integers(0, n, size=n)))
        jobs.append((f"beta random n={n}", lambda b, f=f: beta(f, backend=b)))
    jobs.append(("beta identity n=8", lambda b: beta(Transformation.identity(8), backend=b)))
    if max_n >= 9:
        g = cycle_union(1, 2)
        jobs.append(("beta cycle_union(1,2)", lambda b, g=g: beta(g, backend=b)))
    for n in (6, 7, 8):
        path = Transformation((0,) + tuple(range(n - 1)))
        jobs.append((f"graceful count path n={n}", lambda b, f=path: _graceful_count(f, b)))
    for n in (5, 6, 7):
        E = build_edge_polynomial(Transformation((0,) + tuple(range(n - 1))))
        jobs.append((f"lattice scan edge product n={n}",
                     lambda b, P=E: canonical_rep_is_nonzero(P, backend=b)))
        C = lcm(build_vertex_vandermonde(n), E)
        jobs.append((f"lattice scan certificate n={n}",
                     lambda b, P=C: canonical_rep_is_nonzero(P, backend=b)))
    return jobs


def main():
    ap = argparse.ArgumentParser(description="numba vs numpy kernel timings")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()

    print(f"{'case':<34}{'numba s':>11}{'numpy s':>11}{'ratio':>8}")
    for name, job in build_jobs(args.max_n):
        if job("numba") != job("numpy"):
            raise SystemExit(f"backends disagree on {name}")
        t_nb = _best_of(lambda: job("numba"), args.repeat)
        t_np = _best_of(lambda: job("numpy"), args.repeat)
        print(f"{name:<34}{t_nb:>11.4f}{t_np:>11.4f}{t_np / max(t_nb, 1e-9):>8.1f}")


if __name__ == "__main__":
    main()
