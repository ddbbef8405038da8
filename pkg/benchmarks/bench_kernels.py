"""Time each hot kernel on the compiled and pure-Python backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import timeit

import numpy as np

from abshear import kernels

R, V0, FLUX, E = 1e-6, 6e7, 1e-15, 1.602176634e-19
GAMMA = -1.758820010772163e-4

rng = np.random.default_rng(0)
_r = rng.uniform(1.5 * R, 20 * R, 10201)
_t = rng.uniform(0, 2 * math.pi, _r.size)
GRID = (_r * np.cos(_t), _r * np.sin(_t), _r * 1e-4, FLUX)

CASES = {
    "streamline_rk4 (4000 steps)": lambda k: k.streamline_rk4(-10 * R, 2 * R, 0.005 * R / V0, 4000, V0, R, 0.0, 10 * R),
    "ab_grid_decompose (10201 pts)": lambda k: k.ab_grid_decompose(*GRID),
    "angle_average (4096 pts)": lambda k: k.angle_average(2 * R, 1, 0.0, math.pi, 4096, V0, R, FLUX, E, GAMMA),
    "lateral_force_annulus (16385 x 65)": lambda k: k.lateral_force_annulus(R, 10 * R, 16385, 65, V0, FLUX, E),
}


def best(fn, impl, repeat):
    return min(timeit.repeat(lambda: fn(impl), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    c = kernels.compiled_impl
    print(f"{'kernel':<36}{'python (ms)':>14}{'compiled (ms)':>16}{'speedup':>10}")
    for name, fn in CASES.items():
        tp = best(fn, kernels.python_impl, args.repeat)
        if c is None:
            print(f"{name:<36}{tp * 1e3:>14.3f}{'n/a':>16}{'':>10}")
            continue
        tc = best(fn, c, args.repeat)
        print(f"{name:<36}{tp * 1e3:>14.3f}{tc * 1e3:>16.3f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
