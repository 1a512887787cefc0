"""Compare the compiled and pure-Python composition kernels.

    python benchmarks/bench_compose.py [--n 6 8 12] [--pairs 2000] [--repeat 5]

Both kernels get identical pre-realized inputs, so the timings cover the
middle-row trace only.  The ``compose`` row times a full uncached product (trace plus
normal form) with whichever backend the package selected at import.
"""

import argparse
import random
import timeit

from affinetl import BACKEND, _kernel_py
from affinetl.annular import enumerate_annular
from affinetl.diagram import Diagram, compose, realize

try:
    from affinetl import _kernel_c
except ImportError:
    _kernel_c = None


def random_diagram(rng: random.Random, n: int) -> Diagram:
    t = rng.choice([t for t in range(n % 2, n + 1, 2) if t])
    rows = enumerate_annular(n, t)
    return Diagram(rng.choice(rows), rng.choice(rows), rng.randint(-3, 3))


def trace_args(A: Diagram, B: Diagram) -> tuple:
    a, b = realize(A), realize(B)
    return (A.n, a.top_row, a.top_pos, a.bot_row, a.bot_pos,
            b.top_row, b.top_pos, b.bot_row, b.bot_pos)


def best_of(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[4, 6, 8, 12])
    p.add_argument("--pairs", type=int, default=2000)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args(argv)
    rng = random.Random(a.seed)

    kernels = {"python": _kernel_py.compose_trace}
    if _kernel_c is not None:
        kernels["cython"] = _kernel_c.compose_trace
    else:
        print("compiled kernel not built; timing the fallback only")

    print(f"{'n':>3} {'kernel':>8} {'us/pair':>9} {'speedup':>8}")
    for n in a.n:
        pairs = [(random_diagram(rng, n), random_diagram(rng, n)) for _ in range(a.pairs)]
        args = [trace_args(A, B) for A, B in pairs]
        timings = {}
        for name, fn in kernels.items():
            timings[name] = best_of(lambda: [fn(*x) for x in args], a.repeat) / len(args)
        if len(kernels) == 2:
            assert all(_kernel_c.compose_trace(*x) == _kernel_py.compose_trace(*x) for x in args)
        for name, secs in timings.items():
            speed = timings["python"] / secs
            print(f"{n:>3} {name:>8} {secs * 1e6:9.2f} {speed:7.1f}x")
        raw = compose.__wrapped__  # skip the memo table
        full = best_of(lambda: [raw(A, B) for A, B in pairs], a.repeat) / len(pairs)
        print(f"{n:>3} {'compose':>8} {full * 1e6:9.2f}   ({BACKEND})")


if __name__ == "__main__":
    main()
