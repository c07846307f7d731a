"""Compare the numba and numpy mod-p polynomial kernels.

    python3 benchmarks/bench_kernels.py [--degrees 8 32 128] [--repeat 20]

Each case raises x to the power p**d modulo a random monic polynomial, the
core step of distinct-degree factorization, and checks that both backends
return identical arrays.
"""
import argparse
import time

import numpy as np

from arboreal._kernels import kernels


def random_monic(rng, degree, p):
    m = rng.integers(0, p, size=degree + 1).astype(np.int64)
    m[-1] = 1
    return m


def time_call(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", type=int, nargs="+", default=[8, 32, 128, 256])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 13, 97])
    ap.add_argument("--repeat", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    _, nb_pow = kernels("numba")
    _, np_pow = kernels("numpy")
    x = np.array([0, 1], dtype=np.int64)
    # warm up the JIT so compile time is excluded
    nb_pow(x, 5, random_monic(rng, 4, 7), 7)

    print(f"{'deg':>5} {'p':>4} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for deg in args.degrees:
        for p in args.primes:
            m = random_monic(rng, deg, p)
            e = p ** 4
            t_nb, r_nb = time_call(lambda: nb_pow(x, e, m, p), args.repeat)
            t_np, r_np = time_call(lambda: np_pow(x, e, m, p), args.repeat)
            if not np.array_equal(r_nb, r_np):
                raise SystemExit(f"backends disagree at degree {deg}, p = {p}")
            print(f"{deg:>5} {p:>4} {1e3 * t_nb:>10.3f} {1e3 * t_np:>10.3f} {t_np / t_nb:>8.1f}")


if __name__ == "__main__":
    main()
