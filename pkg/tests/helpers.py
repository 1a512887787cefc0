"""Shared oracles and generators for the test suite."""

from __future__ import annotations

import itertools
from functools import lru_cache

from hypothesis import strategies as st

from affinetl.annular import enumerate_annular
from affinetl.diagram import CoverMatching, Diagram, normalize, realize, row_gaps


@lru_cache(maxsize=None)
def all_diagrams(n: int, wmax: int = 2, kmax: int = 1) -> tuple[Diagram, ...]:
    """Every normal form of rank ``n`` with ``|w| <= wmax`` and ``k <= kmax``."""
    out = []
    for t in range(n % 2, n + 1, 2):
        rows = enumerate_annular(n, t)
        for S1 in rows:
            for S2 in rows:
                if t:
                    out.extend(Diagram(S1, S2, w) for w in range(-wmax, wmax + 1))
                else:
                    for g1 in row_gaps(S1):
                        for g2 in row_gaps(S2):
                            out.extend(Diagram(S1, S2, 0, k, g1, g2) for k in range(kmax + 1))
    return tuple(out)


def diagrams(ns=(3, 4, 5), wmax=2, kmax=1):
    return st.sampled_from(ns).flatmap(lambda n: st.sampled_from(all_diagrams(n, wmax, kmax)))


def diagram_pairs(ns=(3, 4, 5), k=2, wmax=2, kmax=1):
    return st.sampled_from(ns).flatmap(
        lambda n: st.tuples(*[st.sampled_from(all_diagrams(n, wmax, kmax))] * k))


def trace_compose(A: Diagram, B: Diagram) -> tuple[int, Diagram]:
    """Stack ``A`` over ``B`` by following paths node by node in the cover.

    Levels: 2 = top of A, 1 = middle, 0 = bottom of B.  Paths alternate
    between A edges and B edges; this is independent of the library kernel.
    """
    n = A.n
    a, b = realize(A), realize(B)

    def step(level, x, use_a):
        if use_a:
            r, y = a.partner(1 if level == 2 else 0, x)
            return (2 if r == 1 else 1), y
        r, y = b.partner(1 if level == 1 else 0, x)
        return (1 if r == 1 else 0), y

    def follow(level, x, use_a, limit=50 * n):
        start = (level, x)
        for _ in range(limit):
            level, x = step(level, x, use_a)
            use_a = not use_a
            if level != 1:
                return level, x
            if start[0] == 1 and use_a and (x - start[1]) % n == 0:
                return level, x
        raise RuntimeError("path did not close")

    tr, tp, br, bp = [], [], [], []
    for x in range(1, n + 1):
        level, y = follow(2, x, True)
        tr.append(1 if level == 2 else 0)
        tp.append(y)
        level, y = follow(0, x, False)
        br.append(1 if level == 2 else 0)
        bp.append(y)

    seen = set()
    contractible = wrapping = 0
    for x in range(1, n + 1):
        if x in seen:
            continue
        level, y = follow(1, x, True)
        if level != 1:
            continue  # on an open path
        # collect residues of the cycle
        cur, use_a = (1, x), True
        while True:
            seen.add((cur[1] - 1) % n + 1)
            cur = step(*cur, use_a)
            use_a = not use_a
            if use_a and (cur[1] - x) % n == 0:
                break
        if y == x:
            contractible += 1
        else:
            wrapping += 1
    cm = CoverMatching(n, tuple(tr), tuple(tp), tuple(br), tuple(bp),
                       a.loops + b.loops + wrapping)
    return contractible, normalize(cm)


@lru_cache(maxsize=None)
def brute_force_all(n):
    """Every involution of 1..n filtered by the interval conditions directly."""
    out = {}
    for perm in itertools.permutations(range(1, n + 1)):
        if any(perm[perm[i] - 1] != i + 1 for i in range(n)):
            continue
        fixed = {i + 1 for i in range(n) if perm[i] == i + 1}
        ok = True
        for i in range(1, n + 1):
            j = perm[i - 1]
            if j <= i:
                continue
            block = set(range(i, j + 1))
            if {perm[k - 1] for k in block} != block:
                ok = False
            inside = len(fixed & block)
            if inside not in (0, len(fixed)):
                ok = False
        if ok:
            out.setdefault(len(fixed), []).append(perm)
    return out


def brute_force(n, t):
    return tuple(sorted(brute_force_all(n).get(t, ())))
