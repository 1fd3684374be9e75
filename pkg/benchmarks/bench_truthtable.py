"""Compare the compiled and pure-Python truth-table kernels.

    python benchmarks/bench_truthtable.py [--repeat N]

Three workloads: many small formulas (the completion engine's query mix),
single formulas with large tables, and the full countermodel sweep over
all formulas on {p, q} with at most 5 leaves.
"""
import argparse
import random
import time

from ipcalc import _truthtable_py, semantics
from ipcalc.formula import Implies, Var, enumerate_formulas
from ipcalc.lindenbaum import TautologyError, run_countermodel

try:
    from ipcalc import _truthtable as compiled
except ImportError:
    compiled = None


def random_formula(rng, names, size):
    if size == 1:
        return Var(rng.choice(names))
    k = rng.randint(1, size - 1)
    return Implies(random_formula(rng, names, k), random_formula(rng, names, size - k))


def programs(rng, nvars, size, count):
    names = [f"x{i:02d}" for i in range(nvars)]
    index = {n: i for i, n in enumerate(names)}
    return [semantics.compile_program(random_formula(rng, names, size), index) for _ in range(count)]


def time_kernel(kernel, progs, nvars, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for prog in progs:
            kernel(prog, nvars)
        best = min(best, time.perf_counter() - start)
    return best


def sweep(kernel):
    semantics._kernel = kernel
    semantics.truth_mask.cache_clear()
    start = time.perf_counter()
    for f in enumerate_formulas(["p", "q"], 5):
        try:
            run_countermodel(f, f.size)
        except TautologyError:
            pass
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--skip-sweep", action="store_true")
    args = parser.parse_args()

    kernels = {"python": _truthtable_py.truth_mask}
    if compiled is not None:
        kernels["compiled"] = compiled.truth_mask
    else:
        print("compiled kernel not available; timing the fallback only")

    rng = random.Random(0)
    workloads = [
        ("20000 formulas, 2 vars, 9 leaves", 2, programs(rng, 2, 9, 20000)),
        ("5000 formulas, 6 vars, 15 leaves", 6, programs(rng, 6, 15, 5000)),
        ("200 formulas, 12 vars, 30 leaves", 12, programs(rng, 12, 30, 200)),
        ("20 formulas, 18 vars, 40 leaves", 18, programs(rng, 18, 40, 20)),
    ]
    header = f"{'workload':<36}" + "".join(f"{name:>12}" for name in kernels) + f"{'speedup':>10}"
    print(header)
    for label, nvars, progs in workloads:
        times = {name: time_kernel(k, progs, nvars, args.repeat) for name, k in kernels.items()}
        row = f"{label:<36}" + "".join(f"{t:>11.4f}s" for t in times.values())
        if "compiled" in times:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)

    if not args.skip_sweep:
        original = semantics._kernel
        times = {name: sweep(k) for name, k in kernels.items()}
        semantics._kernel = original
        row = f"{'countermodel sweep, 550 formulas':<36}" + "".join(f"{t:>11.2f}s" for t in times.values())
        if "compiled" in times:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
