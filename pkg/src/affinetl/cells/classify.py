"""Tables of finite-dimensional simple modules by flavor and parity of rank."""

from __future__ import annotations

from ..algebra import Flavor
from ..annular import enumerate_annular

__all__ = ["NotCoveredError", "classify_simples", "odd_strata", "even_strata"]

PARAMETER = "alpha in K\\{0}"


class NotCoveredError(ValueError):
    """The flavor/parity combination has no classification to report."""


def odd_strata(n: int) -> list[int]:
    """``T(n)``: odd numbers up to and including ``n``."""
    return list(range(1, n + 1, 2))


def even_strata(n: int) -> list[int]:
    """``T'(n) = {1, ..., n/2}``; label ``t`` stands for ``2t`` strands."""
    return list(range(1, n // 2 + 1))


def _row(label: int, tau: int, delta: int, n: int, notes: str) -> dict:
    return {
        "stratum": label,
        "tau": tau,
        "delta": delta,
        "dim": len(enumerate_annular(n, tau)),
        "parameter": PARAMETER,
        "notes": notes,
    }


def _trivial() -> dict:
    return {"stratum": "trivial", "tau": None, "delta": None, "dim": 1,
            "parameter": None, "notes": "E_i -> 0, 1 -> 1"}


def classify_simples(n: int, flavor) -> dict:
    flavor = Flavor(flavor)
    if n < 3:
        raise ValueError("rank must be at least 3")
    rows = []
    if n % 2:
        if flavor is Flavor.DN:
            rows = [_row(t, t, 1, n, "u acts with u^n = alpha^t") for t in odd_strata(n)]
        elif flavor is Flavor.ON:
            rows = [_row(t, t, 2, n, "restriction of the D_n family; alpha and -alpha agree")
                    for t in odd_strata(n)]
        else:
            rows = [_row(t, t, 2, n, "restricted from O_n") for t in odd_strata(n) if t != n]
            rows.append(_trivial())
    else:
        if flavor is Flavor.DN:
            raise NotCoveredError(f"D_{n} with n even is not covered by the classification")
        if flavor is Flavor.ON:
            rows = [_row(t, 2 * t, 2, n, "I_0 acts as zero") for t in even_strata(n)]
        else:
            rows = [_row(t, 2 * t, 2, n, "I_0 acts as zero; restricted from O_n")
                    for t in even_strata(n) if t != n // 2]
            rows.append(_trivial())
    return {"n": n, "flavor": flavor.value, "parity": "odd" if n % 2 else "even",
            "rows": rows}
