"""Compare the compiled kernels against the pure-Python fallback.

Run from the repository root after building the extension:

    python3 benchmarks/bench_kernels.py [--repeat N]

The first table times each kernel on identical inputs. The second runs a
decomposition and closure workload in a subprocess per backend, so that the
backend is picked at import exactly as in normal use.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit
from itertools import product

from monodec import _kernels_py

try:
    from monodec import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

WORKLOAD = """
import random, time
from monodec import MonomialIdeal, decompose, integral_closure, symbolic_power
from monodec.kernels import BACKEND
rng = random.Random(7)
ideals = []
for _ in range(300):
    d = rng.randint(2, 5)
    gens = [tuple(rng.randint(0, 4) for _ in range(d)) for _ in range(rng.randint(2, 6))]
    gens = [g for g in gens if any(g)] or [(1,) + (0,) * (d - 1)]
    ideals.append(MonomialIdeal(d, gens))
start = time.perf_counter()
for I in ideals:
    decompose(I)
    symbolic_power(I, 2)
for I in ideals[:60]:
    if I.dim <= 3:
        integral_closure(I)
print(BACKEND, time.perf_counter() - start)
"""


def vectors(rng, count, dim, top):
    return [tuple(rng.randint(0, top) for _ in range(dim)) for _ in range(count)]


def kernel_cases(rng):
    a = vectors(rng, 400, 5, 6)
    b = vectors(rng, 400, 5, 6)
    gens = _kernels_py.minimalize(vectors(rng, 60, 4, 5))
    grid = list(product(range(7), repeat=4))
    return {
        "minimalize (800 vectors, d=5)": ("minimalize", (a + b,)),
        "lcm_pairs (60 x 60, d=4)": ("lcm_pairs", (gens, gens)),
        "mul_pairs (60 x 60, d=4)": ("mul_pairs", (gens, gens)),
        "members (2401 points, d=4)": ("members", (gens, grid)),
    }


def time_call(module, name, args, repeat):
    fn = getattr(module, name)
    return min(timeit.repeat(lambda: fn(*args), number=5, repeat=repeat)) / 5


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["MONODEC_PURE_PYTHON"] = "1"
    else:
        env.pop("MONODEC_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, check=True,
                         capture_output=True, text=True).stdout.split()
    return out[0], float(out[1])


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    if _kernels_c is None:
        print("compiled extension not built; only the fallback is available")
    cases = kernel_cases(random.Random(1))
    print(f"{'kernel':34} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, (name, call_args) in cases.items():
        py = time_call(_kernels_py, name, call_args, args.repeat) * 1e3
        if _kernels_c is None:
            print(f"{label:34} {py:10.3f} {'-':>10} {'-':>8}")
            continue
        assert getattr(_kernels_c, name)(*call_args) == getattr(_kernels_py, name)(*call_args)
        cy = time_call(_kernels_c, name, call_args, args.repeat) * 1e3
        print(f"{label:34} {py:10.3f} {cy:10.3f} {py / cy:7.1f}x")

    print()
    print("end-to-end workload (decompose, symbolic square, closure):")
    for pure in (True, False):
        backend, seconds = end_to_end(pure)
        print(f"  {backend:8} {seconds:7.2f} s")


if __name__ == "__main__":
    main()
