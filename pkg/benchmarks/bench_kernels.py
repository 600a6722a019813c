"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--max-n 6] [--repeat 3]

The first numba call of each kernel is reported separately so JIT or cache
loading does not pollute the steady-state numbers.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from brauer_dessins import _accel
from brauer_dessins.algebra import presentation
from brauer_dessins.dessin import example_3, example_fig1


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def random_pairs(n, count, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        s, a = list(range(n)), list(range(n))
        rng.shuffle(s)
        rng.shuffle(a)
        out.append((np.array(s), np.array(a)))
    return out


def cases(max_n):
    for n in range(4, max_n + 1):
        yield f"enumerate n={n}", lambda b, n=n: _accel.enumerate_transitive_pairs(n, backend=b)
    pairs = random_pairs(max_n, 50)
    yield f"canonical_pair n={max_n} x50", lambda b: [_accel.canonical_pair(s, a, backend=b) for s, a in pairs]
    for name, d in (("fig1", example_fig1()), ("example_3", example_3())):
        table = presentation(d).table
        yield f"associativity {name} dim={table.shape[0]}", lambda b, t=table: _accel.associativity_failures(t, backend=b)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if not _accel.HAVE_NUMBA:
        print("numba not installed; only the numpy backend is available")
    print(f"{'kernel':38s} {'numba first':>12s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, fn in cases(args.max_n):
        t_np = best_of(lambda: fn("numpy"), args.repeat)
        if _accel.HAVE_NUMBA:
            first = best_of(lambda: fn("numba"), 1)
            t_nb = best_of(lambda: fn("numba"), args.repeat)
            print(f"{name:38s} {first:12.4f} {t_nb:10.4f} {t_np:10.4f} {t_np / t_nb:7.1f}x")
        else:
            print(f"{name:38s} {'-':>12s} {'-':>10s} {t_np:10.4f} {'-':>8s}")


if __name__ == "__main__":
    main()
