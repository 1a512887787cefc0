"""Cellular bilinear form on a cell module of ``J_q(n)``.

``phi(T, U)`` is read off ``C_{A,T} C_{U,B} = phi(T, U) C_{A,B}`` modulo
lower cells, using the top cell ``j = t`` (whose elements are single
diagrams) and symbolic or rational ``alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..annular import enumerate_annular, standard_base, star_involution
from ..diagram import Diagram, compose
from ..scalars import LaurentPoly, Ring
from .datum import base_winding
from .jones import JonesContext, alpha_power
from .linalg import rank_domain
from .modules import module_ring

__all__ = ["CellularityViolation", "GramMatrix", "gram_matrix", "gram_entry"]


class CellularityViolation(RuntimeError):
    """The form depends on the auxiliary indices used to extract it."""


@dataclass(frozen=True)
class GramMatrix:
    n: int
    tau: int
    alpha: Fraction | None
    ring: Ring
    basis: tuple
    entries: tuple
    rank: int
    aux_checked: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "n": self.n, "tau": self.tau,
            "alpha": "symbolic" if self.alpha is None else str(self.alpha),
            "ring": str(self.ring), "dim": self.dim, "rank": self.rank,
            "aux_checked": self.aux_checked,
            "basis": [list(S) for S in self.basis],
            "matrix": [[c.to_json() for c in row] for row in self.entries],
        }


def _cell(S: tuple, T: tuple) -> Diagram:
    Ts = star_involution(T)
    return Diagram(S, Ts, base_winding(S, Ts))


def gram_entry(ctx: JonesContext, ring: Ring, T: tuple, U: tuple,
               A: tuple, B: tuple) -> LaurentPoly:
    x, D = compose(_cell(A, T), _cell(U, B))
    if D.t < ctx.tau:
        return ring.zero()
    target = _cell(A, B)
    if (D.top, D.bot) != (target.top, target.bot):
        raise CellularityViolation(f"product left the ({A}, {B}) block")
    off = D.w - target.w
    if off % ctx.delta:
        raise CellularityViolation(f"winding offset {off} not divisible by {ctx.delta}")
    return ring.two() ** x * alpha_power(ring, ctx.alpha, off // ctx.delta)


def gram_matrix(n: int, tau: int, alpha=None, aux: tuple | None = None,
                check_aux: bool | int = False) -> GramMatrix:
    """Gram matrix of ``W(tau)`` with its rank over the fraction field.

    ``aux = (A, B)`` picks the outer indices (default: the standard base
    twice).  ``check_aux`` recomputes with every pair, or with the first
    ``check_aux`` pairs when an int, and raises on disagreement.
    """
    ctx = JonesContext(n, tau, alpha)
    ring = module_ring(ctx.alpha)
    M = enumerate_annular(n, tau)
    A, B = aux or (standard_base(n, tau), standard_base(n, tau))

    def build(A, B):
        return tuple(tuple(gram_entry(ctx, ring, T, U, A, B) for U in M) for T in M)

    entries = build(A, B)
    checked = 0
    if check_aux:
        pairs = [(a, b) for a in M for b in M]
        if check_aux is not True:
            pairs = pairs[:int(check_aux)]
        for a, b in pairs:
            if build(a, b) != entries:
                raise CellularityViolation(f"form differs for auxiliary pair {a}, {b}")
            checked += 1
    return GramMatrix(n, tau, ctx.alpha, ring, tuple(M), entries,
                      rank_domain(entries), checked)
