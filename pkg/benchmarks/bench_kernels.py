#!/usr/bin/env python3
"""Side-by-side benchmark of the two linear algebra backends.

Times the row-reduction and binary-form substitution kernels on workloads
shaped like the ones the engine actually runs (small dense blocks, long
restriction vectors), numba against the pure-numpy fallback, and finishes
with an end-to-end series computation in both modes via subprocesses.
"""

import os
import subprocess
import sys
import time

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from plfg import linalg  # noqa: E402

if linalg.BACKEND != "numba":
    print("numba backend unavailable; nothing to compare")
    sys.exit(0)

rng = np.random.default_rng(0)
P = 13


def timeit(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rref(rows, cols, iters):
    mats = [rng.integers(0, P, size=(rows, cols)).astype(np.int64)
            for _ in range(iters)]
    inv = linalg.inverse_table(P)

    def run(kernel):
        for m in mats:
            kernel(m.copy(), P, inv)

    return timeit(run, linalg._rref_numba), timeit(run, linalg._rref_numpy)


def bench_subst(n, iters):
    vecs = [rng.integers(0, P, size=n + 1).astype(np.int64) for _ in range(iters)]
    ms = [tuple(int(x) for x in rng.integers(0, P, size=4)) for _ in range(iters)]

    def run(kernel):
        for v, m in zip(vecs, ms):
            kernel(v, *m, P)

    return timeit(run, linalg._subst_numba), timeit(run, linalg._subst_numpy)


# warm the JIT before timing
linalg.rref(rng.integers(0, P, size=(4, 4)).astype(np.int64), P)
linalg.substitute_binary_form(rng.integers(0, P, size=8).astype(np.int64),
                              (1, 2, 3, 4), P)

print(f"{'kernel':28s} {'numba (s)':>10s} {'numpy (s)':>10s} {'speedup':>8s}")
for rows, cols, iters in ((40, 40, 200), (120, 40, 200), (460, 460, 4)):
    tn, tp = bench_rref(rows, cols, iters)
    print(f"{f'rref {rows}x{cols} x{iters}':28s} {tn:10.4f} {tp:10.4f} "
          f"{tp / tn:7.1f}x")
for n, iters in ((60, 400), (456, 60)):
    tn, tp = bench_subst(n, iters)
    print(f"{f'substitution n={n} x{iters}':28s} {tn:10.4f} {tp:10.4f} "
          f"{tp / tn:7.1f}x")

SNIPPET = (
    "import time; t0=time.time();"
    "from plfg.gf import named_subgroup;"
    "from plfg.algebra import BE;"
    "from plfg.invariants import invariant_poincare;"
    "dims = invariant_poincare(named_subgroup('3x4S4', 13), BE(13), 600);"
    "print(f'{sum(dims)} classes, {time.time()-t0:.2f}s')"
)
print("end-to-end timings below include interpreter start-up; the numba run "
      "also pays the one-off JIT cache load")
for label, env in (("numba", {}), ("numpy", {"PLFG_PURE_NUMPY": "1"})):
    proc = subprocess.run([sys.executable, "-c", SNIPPET],
                          capture_output=True, text=True,
                          env={**os.environ, **env})
    print(f"end-to-end series p=13 [{label}]: {proc.stdout.strip()}")
