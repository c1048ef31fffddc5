"""Compare the compiled kernels with their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat N] [--sweep]

Each row is the best of N runs. ``--sweep`` also times a full theorem sweep
over posets on at most five points under each backend (separate processes,
since the backend is fixed at import).
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

from zdposet import _pykernels, gamma, named_example
from zdposet.poset import build_poset

try:
    from zdposet import _ckernels
except ImportError:
    _ckernels = None


def _cases():
    ps5 = named_example("powerset", 5)
    ps6 = named_example("powerset", 6)
    g6 = gamma(ps6).adj
    wide = build_poset([str(i) for i in range(40)], [("0", str(i)) for i in range(1, 40)]).down
    raw = [(1 << i) | (1 << (i + 1) if i + 1 < 40 else 0) for i in range(40)]
    return [
        ("poset_down_masks(5)", "poset_down_masks", (5,)),
        ("transitive_closure(chain 40)", "transitive_closure", (raw,)),
        ("annihilator_masks(antichain 40)", "annihilator_masks", (wide,)),
        ("annihilator_masks(powerset 6)", "annihilator_masks", (ps6.down,)),
        ("max_clique(gamma powerset 5)", "max_clique", (gamma(ps5).adj,)),
        ("max_clique(gamma powerset 6)", "max_clique", (g6,)),
        ("girth(gamma powerset 6)", "girth", (g6,)),
        ("distance_matrix(gamma powerset 6)", "distance_matrix", (g6,)),
    ]


def _best(fn, args, repeat: int) -> float:
    timer = timeit.Timer(lambda: fn(*args))
    loops, _ = timer.autorange()
    return min(timer.repeat(repeat, loops)) / loops


def _sweep_time(pure: bool) -> float:
    env = {**os.environ, "ZDPOSET_PURE_PYTHON": "1" if pure else "0"}
    code = "import time, zdposet; t=time.perf_counter(); zdposet.sweep(5); print(time.perf_counter()-t)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--sweep", action="store_true")
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled kernels not built; showing pure-Python timings only")
    print(f"{'kernel':<36}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, name, fargs in _cases():
        py = _best(getattr(_pykernels, name), fargs, args.repeat)
        if _ckernels is None:
            print(f"{label:<36}{py * 1e3:>10.3f}ms")
            continue
        a, b = getattr(_ckernels, name)(*fargs), getattr(_pykernels, name)(*fargs)
        # cliques may differ but must have the same size
        assert (bin(a).count("1") == bin(b).count("1")) if name == "max_clique" else a == b
        cy = _best(getattr(_ckernels, name), fargs, args.repeat)
        print(f"{label:<36}{py * 1e3:>10.3f}ms{cy * 1e3:>10.3f}ms{py / cy:>9.1f}x")

    if args.sweep:
        py = _sweep_time(pure=True)
        cy = _sweep_time(pure=False)
        print(f"{'sweep(5)':<36}{py * 1e3:>10.1f}ms{cy * 1e3:>10.1f}ms{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
