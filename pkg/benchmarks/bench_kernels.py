"""Time the numba kernels against their numpy fallbacks.

Run with ``python benchmarks/bench_kernels.py``.  Both variants are called on
identical inputs, their outputs are compared, and the best-of-N wall time of
each is printed.  The numba timings exclude the first (compiling) call.
"""
import argparse
import timeit

import numpy as np

from stgnp import kernels


def _cases(rng, scale):
    n = 2000 * scale
    values = rng.normal(size=(n, 16))
    groups = rng.integers(0, 64, size=n)
    w = rng.normal(size=500 * scale)
    adjacency = (rng.random((25, 25)) < 0.2).astype(np.float64)
    np.fill_diagonal(adjacency, 0.0)
    pend = rng.uniform(-0.5, 0.5, size=(200 * scale, 4))
    lor = rng.normal(size=(50 * scale, 6, 3))
    coupling = rng.normal(size=(50 * scale, 6, 6)) * 0.1
    phases = rng.uniform(0, 2 * np.pi, size=(50 * scale, 25))
    omega = rng.normal(size=(50 * scale, 25))
    return {
        "segment_mean": ((values, groups, 64), {}),
        "css_residuals": ((w, 0.1, np.array([0.5, 0.3]), np.array([0.2, -0.1])), {}),
        "pendulum_rhs": ((pend, 1.0, 1.0, 1.0, 1.0, 2.0, 9.81), {}),
        "lorenz_rhs": ((lor, coupling, 10.0, 28.0, 8.0 / 3.0, 1.0, False), {}),
        "kuramoto_rhs": ((phases, omega, adjacency), {}),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20)
    ap.add_argument("--scale", type=int, default=1, help="input size multiplier")
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    print(f"{'kernel':<15} {'numpy [ms]':>11} {'numba [ms]':>11} {'speedup':>8} {'max|diff|':>10}")
    for name, (a, kw) in _cases(rng, args.scale).items():
        f_np = getattr(kernels, f"{name}_numpy")
        f_nb = getattr(kernels, f"{name}_numba")
        diff = float(np.max(np.abs(f_np(*a, **kw) - f_nb(*a, **kw))))  # also compiles
        t_np = min(timeit.repeat(lambda: f_np(*a, **kw), repeat=args.repeat, number=args.number))
        t_nb = min(timeit.repeat(lambda: f_nb(*a, **kw), repeat=args.repeat, number=args.number))
        ms_np = 1e3 * t_np / args.number
        ms_nb = 1e3 * t_nb / args.number
        print(f"{name:<15} {ms_np:11.3f} {ms_nb:11.3f} {ms_np / ms_nb:8.1f} {diff:10.2e}")


if __name__ == "__main__":
    main()
