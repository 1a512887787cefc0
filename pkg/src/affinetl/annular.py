"""Annular involutions of {1..n}.

An involution is stored in one-line notation as a tuple ``S`` with
``S[i - 1] = S(i)``.  It is annular when every 2-cycle ``{i, j}`` (i < j)
satisfies

(a) ``S`` maps the integer interval ``[i, j]`` onto itself, and
(b) ``[i, j]`` contains either no fixed point or every fixed point.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = [
    "InvalidInvolutionError", "is_involution", "is_annular", "make_annular",
    "fixed_points", "pairs", "enumerate_annular", "star_involution",
    "standard_base", "involution_to_json", "involution_from_json",
]


class InvalidInvolutionError(ValueError):
    pass


def is_involution(S) -> bool:
    n = len(S)
    return all(1 <= S[i] <= n and S[S[i] - 1] == i + 1 for i in range(n))


def fixed_points(S) -> list[int]:
    return [i + 1 for i, x in enumerate(S) if x == i + 1]


def pairs(S) -> list[tuple[int, int]]:
    """The 2-cycles ``(i, j)`` with ``i < j``, sorted."""
    return [(i + 1, x) for i, x in enumerate(S) if x > i + 1]


def is_annular(S) -> bool:
    if not is_involution(S):
        raise InvalidInvolutionError(f"{tuple(S)} is not an involution")
    fix = fixed_points(S)
    for i, j in pairs(S):
        if any(not i <= S[k - 1] <= j for k in range(i, j + 1)):
            return False
        inside = sum(1 for f in fix if i <= f <= j)
        if inside not in (0, len(fix)):
            return False
    return True


def make_annular(seq) -> tuple[int, ...]:
    """Validate ``seq`` and return it as a tuple."""
    S = tuple(int(x) for x in seq)
    if len(S) < 1 or not is_annular(S):
        raise InvalidInvolutionError(f"{S} is not annular")
    return S


@lru_cache(maxsize=None)
def enumerate_annular(n: int, t: int) -> tuple[tuple[int, ...], ...]:
    """All annular involutions of {1..n} with exactly ``t`` fixed points.

    Sorted lexicographically by one-line notation.  Empty when ``t`` and
    ``n`` have different parity.
    """
    if t < 0 or t > n or (n - t) % 2:
        return ()
    out = []
    S = [0] * n

    def place(i: int, fixed_left: int, pairs_left: int):
        # i is 0-based; S[k] == 0 marks an unassigned position
        while i < n and S[i]:
            i += 1
        if i == n:
            if is_annular(S):
                out.append(tuple(S))
            return
        if fixed_left:
            S[i] = i + 1
            place(i + 1, fixed_left - 1, pairs_left)
            S[i] = 0
        if pairs_left:
            j = i + 1
            # non-crossing: the partner may only skip over unassigned positions
            while j < n and not S[j]:
                S[i], S[j] = j + 1, i + 1
                place(i + 1, fixed_left, pairs_left - 1)
                S[i] = S[j] = 0
                j += 1

    place(0, t, (n - t) // 2)
    return tuple(sorted(out))


def star_involution(S) -> tuple[int, ...]:
    """Conjugate by the longest element: ``i -> n + 1 - S(n + 1 - i)``."""
    n = len(S)
    return tuple(n + 1 - S[n - i] for i in range(1, n + 1))


def standard_base(n: int, t: int) -> tuple[int, ...]:
    """Fix 1..t and nest arcs ``(t + i, n + 1 - i)`` over ``[t + 1, n]``."""
    if t < 1 or t > n or (n - t) % 2 or (n % 2 == 0 and t < 2):
        raise ValueError(f"no standard base for n={n}, t={t}")
    S = list(range(1, n + 1))
    for i in range(1, (n - t) // 2 + 1):
        a, b = t + i, n + 1 - i
        S[a - 1], S[b - 1] = b, a
    return make_annular(S)


def involution_to_json(S) -> dict:
    return {"n": len(S), "map": list(S)}


def involution_from_json(obj: dict) -> tuple[int, ...]:
    S = make_annular(obj["map"])
    if len(S) != obj["n"]:
        raise InvalidInvolutionError("length does not match n")
    return S
