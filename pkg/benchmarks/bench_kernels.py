"""Compare the compiled and pure-Python kernels on the exhaustive sweeps.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from lediagrams._kernels import _purepy
from lediagrams.filling import PatternClass
from lediagrams.shape import young_shape

try:
    from lediagrams._kernels import _core
except ImportError:
    _core = None

SQUARE = young_shape((4, 4, 4, 4))
WORKLOADS = [
    ("count X, 4x4 square", SQUARE, lambda k, g: k.count_by_ones(g, 4, 4, PatternClass.X.mask)),
    ("count LE, (5,4,3,2,1)", young_shape((5, 4, 3, 2, 1)),
     lambda k, g: k.count_by_ones(g, 5, 5, PatternClass.LE.mask)),
    ("Phi sweep, 4x4 square", SQUARE, lambda k, g: k.bijection_sweep(g, 4, 4, False)),
    ("Phi2 sweep, 4x4 square", SQUARE, lambda k, g: k.bijection_sweep(g, 4, 4, True)),
    ("orientation sweep, 3x4", young_shape((4, 4, 4)), lambda k, g: k.orientation_sweep(g, 3, 4)),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    kernels = [("python", _purepy)] + ([("cython", _core)] if _core else [])
    print(f"{'workload':<26}" + "".join(f"{name:>12}" for name, _ in kernels) + "   speedup")
    for label, shape, run in WORKLOADS:
        g = shape.template()[0]
        results = [run(k, g) for _, k in kernels]
        assert all(r == results[0] for r in results), f"backends disagree on {label}"
        times = [best_of(lambda k=k: run(k, g), args.repeat) for _, k in kernels]
        speed = f"{times[0] / times[1]:9.0f}x" if len(times) == 2 else "        -"
        print(f"{label:<26}" + "".join(f"{t:11.4f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
