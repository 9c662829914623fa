"""Compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Times row reduction and exhaustive minimum-weight search with each
backend on the same inputs and checks that both return the same answer.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from toricodes import linalg
from toricodes.code import build_code
from toricodes.families import FamilySpec, family_points
from toricodes.gf import field_for_order


def best_of(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases():
    rng = np.random.default_rng(0)
    for q, shape in ((8, (40, 49)), (16, (120, 225)), (17, (150, 256))):
        F = field_for_order(q)
        A = rng.integers(0, q, shape)
        yield f"rref q={q} {shape[0]}x{shape[1]}", F, (lambda F=F, A=A, b=None: linalg.rref(F, A, backend=b)[1])
    for q, spec in ((8, FamilySpec.triangle(8, 2)), (5, FamilySpec.xab(5, 2, 1)), (7, FamilySpec.xab(7, 1, 0))):
        F = field_for_order(q)
        G = build_code(F, family_points(spec)).G
        yield (f"min_weight q={q} {spec.label()} ({q}^{G.shape[0]} words)", F,
               (lambda F=F, G=G, b=None: linalg.min_weight(F, G, backend=b)))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if linalg.BACKEND != "cython":
        print("compiled kernels are not built; only the numpy backend is available")
    print(f"{'case':<48} {'numpy s':>9} {'cython s':>9} {'speedup':>8}")
    for name, F, fn in cases():
        t_py, r_py = best_of(lambda: fn(b="python"), args.repeat)
        if linalg.BACKEND == "cython":
            t_c, r_c = best_of(lambda: fn(b="cython"), args.repeat)
            if r_c != r_py:
                raise SystemExit(f"{name}: backends disagree ({r_py} vs {r_c})")
            print(f"{name:<48} {t_py:9.4f} {t_c:9.4f} {t_py / t_c:8.1f}")
        else:
            print(f"{name:<48} {t_py:9.4f} {'-':>9} {'-':>8}")


if __name__ == "__main__":
    main()
