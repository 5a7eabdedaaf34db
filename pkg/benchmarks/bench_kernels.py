"""Compare the compiled and pure-Python kernels on the two hot loops.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from cyclocode import kernels
from cyclocode.code_family import _subfield_codes, coordinate_tables, validate_params
from cyclocode.finite_field import build_field


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def cases():
    F81 = build_field(3, 2, 2)
    P81 = validate_params(F81, 4, 3, 1, (1, 2, 3))
    F49 = build_field(7, 1, 2)
    P49 = validate_params(F49, 3, 2, 2, (1, 2))
    for label, P in (("weights r=49 t=2", P49), ("weights r=81 t=3", P81)):
        words = coordinate_tables(P)
        add = _subfield_codes(P.field)[1]
        yield label, lambda b, w=words, a=add: kernels.weight_histogram(w, a, backend=b)
    for p, u in ((7, 4), (11, 3)):
        F = build_field(p, 1, 2)
        cands = [range(0, F.order, 2)] * u
        yield (f"omega r={F.r} u={u}",
               lambda b, c=cands, F=F: kernels.sum_class_counts(c, F.zech_table, F.order, backend=b))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels._ckernels is None:
        raise SystemExit("compiled kernels are not built; run pip install -e .")
    print(f"{'case':<20} {'cython (s)':>11} {'python (s)':>11} {'speedup':>8}")
    for label, fn in cases():
        tc, rc = best_of(lambda: fn("cython"), args.repeat)
        tp, rp = best_of(lambda: fn("python"), args.repeat)
        assert np.array_equal(rc, rp), label
        print(f"{label:<20} {tc:>11.4f} {tp:>11.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
