"""Time the weak and strong reachability kernels on both backends.

    python3 benchmarks/bench_kernels.py --n 400 --p 0.02 --radii 1 2 3 4 --repeat 5
"""

import argparse
import statistics
import time

import numpy as np

from gencol import kernels
from gencol.random_graphs import gnp, random_order


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times), statistics.median(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=400)
    parser.add_argument("--p", type=float, default=0.02)
    parser.add_argument("--radii", type=int, nargs="+", default=[1, 2, 3, 4])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    g = gnp(args.n, args.p, args.seed)
    order = random_order(g.n, args.seed)
    indptr, indices = g.csr
    rank = order.rank_array
    print(f"graph: n={g.n} m={g.m}; backends: {', '.join(sorted(backends))}; active: {kernels.BACKEND}")
    print(f"{'kernel':<11}{'r':>3}" + "".join(f"{name + ' ms':>14}" for name in sorted(backends)) + f"{'speedup':>10}")
    for fn_name in ("weak_bfs", "strong_bfs"):
        for r in args.radii:
            results, timings = {}, {}
            for name, mod in sorted(backends.items()):
                fn = getattr(mod, fn_name)
                results[name] = fn(indptr, indices, rank, r)
                timings[name] = best_of(lambda: fn(indptr, indices, rank, r), args.repeat)[0]
            outputs = list(results.values())
            for other in outputs[1:]:
                for a, b in zip(outputs[0], other):
                    np.testing.assert_array_equal(a, b)
            row = f"{fn_name:<11}{r:>3}" + "".join(f"{timings[k] * 1e3:>14.2f}" for k in sorted(timings))
            if {"python", "cython"} <= set(timings):
                row += f"{timings['python'] / timings['cython']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
