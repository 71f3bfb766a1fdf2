"""Compiled vs pure-Python kernels on the two hot loops.

    python3 benchmarks/bench_kernels.py [--n 2000] [--repeat 3]
"""
import argparse
import random
import timeit

from toricap import kernels


def workload(seed: int, n_weights: int):
    rng = random.Random(seed)
    weights = sorted((rng.randint(1, 10**6) for _ in range(n_weights)), reverse=True)
    r = sum(weights)  # large enough that the infimum is not trivially zero
    return weights, r


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2000, help="union table length")
    ap.add_argument("--weights", type=int, default=12)
    ap.add_argument("--kmax", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    weights, r = workload(0, args.weights)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels unavailable; only the Python backend will run")
    union = kernels.union_table(weights, args.n, backend="python")
    results = {}
    for b in backends:
        assert kernels.union_table(weights, args.n, backend=b) == union
        t_union = min(timeit.repeat(lambda: kernels.union_table(weights, args.n, backend=b), number=1, repeat=args.repeat))
        t_scan = min(timeit.repeat(lambda: kernels.scan_infimum(r, union, args.kmax, backend=b), number=1, repeat=args.repeat))
        results[b] = (t_union, t_scan)
        print(f"{b:7s} union_table {t_union * 1e3:9.2f} ms   scan_infimum {t_scan * 1e3:9.2f} ms")
    if len(results) == 2:
        (pu, ps), (cu, cs) = results["python"], results["cython"]
        print(f"speedup  union_table x{pu / cu:.1f}   scan_infimum x{ps / cs:.1f}")


if __name__ == "__main__":
    main()
