"""Compare the compiled and pure-Python sparse kernels.

Run with ``python benchmarks/bench_kernels.py``. Each case times
``sparse_pow`` on a packed multivariate polynomial and the end-to-end
symbolic Jack computation under both backends.
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

from jacksov.kernels import Packing, compiled_backend, python_backend


def _poly(nvars: int, degree: int):
    pk = Packing(nvars, degree * 8)
    # 1 + x_1 + ... + x_n + x_1 x_2
    p = {0: 1}
    for i in range(nvars):
        p[pk.unit(i)] = 1 + i
    if nvars > 1:
        p[pk.unit(0) + pk.unit(1)] = -2
    return p


def bench_pow(repeat: int):
    rows = []
    for nvars, e in [(3, 6), (4, 6), (5, 5), (6, 4)]:
        p = _poly(nvars, e)
        ref = python_backend.sparse_pow(p, e)
        row = [f"sparse_pow n={nvars} e={e} terms={len(ref)}"]
        for mod in (python_backend, compiled_backend):
            if mod is None:
                row.append(float("nan"))
                continue
            assert mod.sparse_pow(p, e) == ref
            row.append(min(timeit.repeat(lambda: mod.sparse_pow(p, e), number=1, repeat=repeat)))
        rows.append(row)
    return rows


_END_TO_END = (
    "import time; from jacksov.sov import separate_via_chain; from jacksov.sympoly import E_basis;"
    "from jacksov.partitions import enumerate_partitions; t=time.perf_counter();"
    "[separate_via_chain(E_basis(l)) for n in (2,3,4) for w in range(6) for l in enumerate_partitions(n,w)];"
    "print(time.perf_counter()-t)"
)


def bench_end_to_end():
    out = []
    for pure in ("1", "0"):
        env = dict(os.environ, JACKSOV_PURE_PYTHON=pure)
        res = subprocess.run([sys.executable, "-c", _END_TO_END], env=env, capture_output=True, text=True, check=True)
        out.append(float(res.stdout))
    return ["A-chain on E basis, n<=4, |lambda|<=5", *out]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if compiled_backend is None:
        print("compiled backend not built; only the Python timings are meaningful")
    rows = bench_pow(args.repeat) + [bench_end_to_end()]
    print(f"{'case':48s} {'python [s]':>12s} {'compiled [s]':>13s} {'speedup':>8s}")
    for name, tp, tc in rows:
        print(f"{name:48s} {tp:12.5f} {tc:13.5f} {tp / tc:8.2f}")


if __name__ == "__main__":
    main()
