"""Compare the compiled kernels with the pure-Python fallback.

Run from the repository root after installing the package::

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Part one times each kernel directly on fixed inputs.  Part two runs a
divisor-heavy workload end to end in two subprocesses, one per backend
(``HIKEFORGE_PURE_PYTHON`` selects the fallback).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from hikeforge import _kernels_py as py

try:
    from hikeforge import _kernels as ext
except ImportError:
    ext = None

WORKLOAD = """
import time
from hikeforge import BACKEND
from hikeforge.fixtures import identity_corpus
from hikeforge.hikes import enumerate_hikes, left_divisors
from hikeforge.identities import check_perm_liouville
from hikeforge.primes import enumerate_primes
graphs = identity_corpus()
start = time.perf_counter()
for g in graphs:
    cat = enumerate_primes(g)
    for h in enumerate_hikes(cat, 7):
        left_divisors(h)
    check_perm_liouville(g, 8)
print(BACKEND, time.perf_counter() - start)
"""


def kernel_inputs(seed: int = 7):
    rng = random.Random(seed)
    masks = [rng.choice([1, 2, 4, 8, 3, 6, 12, 5, 10, 9]) << rng.randrange(40) for _ in range(400)]
    n = 14
    pred = [0] * n
    for i in range(n):
        for j in range(i):
            if rng.random() < 0.15:
                pred[i] |= 1 << j
    rows = [rng.getrandbits(12) for _ in range(12)]
    return {
        "stack_levels": ((masks,), 200),
        "order_ideals": ((pred,), 20),
        "ryser_perm_poly": ((rows, 12), 3),
    }


def time_kernel(module, name: str, args, number: int, repeat: int) -> float:
    fn = getattr(module, name)
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def end_to_end(pure: bool) -> tuple[str, float]:
    env = dict(os.environ)
    env.pop("HIKEFORGE_PURE_PYTHON", None)
    if pure:
        env["HIKEFORGE_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
    backend, seconds = out.stdout.split()
    return backend, float(seconds)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    rows = []
    for name, (call_args, number) in kernel_inputs().items():
        t_py = time_kernel(py, name, call_args, number, args.repeat)
        t_ext = time_kernel(ext, name, call_args, number, args.repeat) if ext else None
        if ext:
            assert sorted(getattr(ext, name)(*call_args)) == sorted(getattr(py, name)(*call_args))
        rows.append({"kernel": name, "python_s": t_py, "compiled_s": t_ext})

    e2e = {}
    for pure in (False, True):
        backend, seconds = end_to_end(pure)
        e2e[backend] = seconds

    if args.json:
        print(json.dumps({"kernels": rows, "end_to_end": e2e}, sort_keys=True, indent=2))
        return 0
    print(f"{'kernel':<18}{'python':>14}{'compiled':>14}{'speedup':>10}")
    for r in rows:
        comp = r["compiled_s"]
        speed = f"{r['python_s'] / comp:9.1f}x" if comp else "      n/a"
        comp_s = f"{comp * 1e3:11.3f} ms" if comp else "           n/a"
        print(f"{r['kernel']:<18}{r['python_s'] * 1e3:11.3f} ms{comp_s}{speed}")
    print()
    for backend, seconds in sorted(e2e.items()):
        print(f"end-to-end workload, {backend:<7} backend: {seconds:7.3f} s")
    if len(e2e) == 2 and "cython" in e2e:
        print(f"end-to-end speedup: {e2e['python'] / e2e['cython']:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
