"""Small dense matrices over exact scalars (nested lists)."""

from __future__ import annotations

from ..scalars import LaurentPoly, Ring


def zeros(ring: Ring, rows: int, cols: int) -> list[list[LaurentPoly]]:
    z = ring.zero()
    return [[z] * cols for _ in range(rows)]


def eye(ring: Ring, size: int) -> list[list[LaurentPoly]]:
    m = zeros(ring, size, size)
    for i in range(size):
        m[i][i] = ring.one()
    return m


def matmul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            s = None
            for k in range(inner):
                x, y = a[i][k], b[k][j]
                if x and y:
                    s = x * y if s is None else s + x * y
            row.append(s if s is not None else a[i][0] * 0 if inner else None)
        out.append(row)
    return out


def matpow(a, k: int, ring: Ring):
    out = eye(ring, len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def scale(a, c):
    return [[c * x for x in row] for row in a]


def matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero(a) -> bool:
    return all(not x for row in a for x in row)


def conjugate_diag(a, d, d_inv):
    """``D^-1 A D`` for diagonal ``D = diag(d)``."""
    return [[d_inv[i] * a[i][j] * d[j] for j in range(len(a))] for i in range(len(a))]


def rank_field(rows) -> int:
    """Rank over a field (entries support ``/``); Gaussian elimination."""
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / p
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def rank_domain(rows) -> int:
    """Rank over the fraction field of an integral domain.

    Division-free elimination: ``row_r <- p * row_r - a * row_pivot``.  Only
    exact zero tests are needed.
    """
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, len(m)):
            a = m[r][c]
            if a:
                m[r] = [p * x - a * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank
