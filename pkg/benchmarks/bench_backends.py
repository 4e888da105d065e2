"""Timing comparison of the int64 elimination kernels.

Run:

    python3 benchmarks/bench_backends.py [--repeat 3]

Two workloads: the Lie closure of a rank-4 corner embedding (echelon
inserts dominated by reduction against existing rows) and row reduction
of dense random integer matrices.  The numba path compiles on first use,
so each backend gets an untimed warmup before measurement.  The closure
dimensions and rank checksums must agree between backends; the script
exits nonzero if they differ.

Dense random rref inflates entries past int64 within a few elimination
steps, after which both selections share the big-integer code, so expect
the gap there to be small; the closure workload stays in machine range
and shows the real kernel difference.
"""

import argparse
import random
import sys
import time

from gimlab import (RatMatrix, get_backend_name, lie_closure, psi_a, rat,
                    rref, set_backend)


def bench_closure():
    im = psi_a(4, rat(2))
    gens = im.all_images()
    t0 = time.perf_counter()
    s = lie_closure(gens)
    return time.perf_counter() - t0, s.dimension


def bench_rref(size=40, count=20, seed=11):
    rng = random.Random(seed)
    mats = [RatMatrix([[rng.randint(-30, 30) for _ in range(size)]
                       for _ in range(size)]) for _ in range(count)]
    t0 = time.perf_counter()
    checksum = sum(rref(m).rank for m in mats)
    return time.perf_counter() - t0, checksum


def run_backend(name, repeat):
    set_backend(name)
    assert get_backend_name() == name
    # warmup: include one closure so jit compilation stays out of the timings
    bench_closure()
    bench_rref(size=8, count=2)
    results = {}
    for label, fn in (("closure psi(4, 2)", bench_closure),
                      ("rref 40x40 x20", bench_rref)):
        best, check = min(fn() for _ in range(repeat))
        results[label] = (best, check)
    return results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="timed repetitions per workload (best is kept)")
    args = ap.parse_args()

    table = {}
    for name in ("numpy", "numba"):
        try:
            table[name] = run_backend(name, args.repeat)
        except RuntimeError as e:
            print("skipping %s: %s" % (name, e))

    if not table:
        print("no backend available")
        return 1

    labels = list(next(iter(table.values())))
    print("%-22s" % "workload", end="")
    for name in table:
        print("%12s" % name, end="")
    print("     speedup" if len(table) == 2 else "")
    code = 0
    for label in labels:
        checks = {table[name][label][1] for name in table}
        if len(checks) != 1:
            print("MISMATCH on %s: %s" % (label, checks))
            code = 1
            continue
        row = "%-22s" % label
        times = [table[name][label][0] for name in table]
        for t in times:
            row += "%11.3fs" % t
        if len(times) == 2 and times[1] > 0:
            row += "%11.2fx" % (times[0] / times[1])
        print(row)
    return code


if __name__ == "__main__":
    sys.exit(main())
