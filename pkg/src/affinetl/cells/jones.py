"""q-Jones quotients: root positions, reduction and the stratified basis.

Odd rank quotients ``D_n``; even rank quotients ``O_n`` and kills ``I_0``.
A stratum is labelled by its through-strand count ``tau``.  Its window size
``t`` is ``tau`` in odd rank and ``tau / 2`` in even rank.  A context fixes
one stratum and with it ``q = alpha^t``, so that the cell modules of that
stratum are defined over the field generated by ``alpha`` and ``zeta_t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import AlgebraElement
from ..annular import enumerate_annular
from ..diagram import Diagram, epsilon_sign, r_offset
from ..scalars import LaurentPoly, Ring, RingMismatchError

__all__ = ["NotInONError", "JonesContext", "strata", "window", "jones_reduce",
           "jones_basis", "root_position"]


class NotInONError(ValueError):
    """An odd-parity diagram was fed to an even-rank quotient."""


def strata(n: int) -> list[int]:
    """Through-strand counts labelling the cells: odd ``1..n`` or even ``2..n``."""
    if n < 3:
        raise ValueError("rank must be at least 3")
    return list(range(1, n + 1, 2)) if n % 2 else list(range(2, n + 1, 2))


def window(n: int, S1: tuple, S2: tuple) -> list[int]:
    """Root-position windings for the pair ``(S1, S2)``."""
    tau = sum(1 for i, s in enumerate(S1) if s == i + 1)
    if n % 2:
        return list(range(tau))
    r = r_offset(S1, S2)
    return [r + 2 * i for i in range(tau // 2)]


@dataclass(frozen=True)
class JonesContext:
    """One stratum of ``J_q(n)``; ``alpha`` is a rational or ``None`` (symbolic)."""

    n: int
    tau: int
    alpha: Fraction | None = None

    def __post_init__(self):
        if self.tau not in strata(self.n):
            raise ValueError(f"tau={self.tau} is not a stratum of rank {self.n}")
        if self.alpha is not None:
            object.__setattr__(self, "alpha", Fraction(self.alpha))
            if self.alpha == 0:
                raise ValueError("alpha must be nonzero")

    @property
    def parity(self) -> str:
        return "odd" if self.n % 2 else "even"

    @property
    def delta(self) -> int:
        return 1 if self.n % 2 else 2

    @property
    def t(self) -> int:
        return self.tau // self.delta

    def q(self, ring: Ring) -> LaurentPoly:
        return alpha_power(ring, self.alpha, self.t)


def alpha_power(ring: Ring, alpha, k: int) -> LaurentPoly:
    if alpha is None:
        if not ring.alpha:
            raise RingMismatchError(f"symbolic alpha needs a ring with alpha, got {ring}")
        return ring.alpha_power(k)
    return ring.const(Fraction(alpha) ** k)


def root_position(n: int, D: Diagram) -> tuple[int, Diagram]:
    """``D = R * u^(n s)`` with ``R`` in root position; returns ``(s, R)``.

    Even rank expects an even-parity diagram with through-strands.
    """
    tau = D.t
    if n % 2:
        s, w0 = divmod(D.w, tau)
        return s, Diagram(D.top, D.bot, w0)
    r = r_offset(D.top, D.bot)
    if (D.w - r) % 2:
        raise NotInONError(f"{D!r} has odd parity")
    s, off = divmod(D.w - r, tau)
    return s, Diagram(D.top, D.bot, r + off)


def jones_reduce(x: AlgebraElement, ctx: JonesContext) -> AlgebraElement:
    """Image of ``x`` in the q-Jones quotient, written in root positions.

    ``q = ctx.q`` is one scalar for the whole algebra: a shift of ``[S1, S2, w]``
    by its own strand count multiplies by ``q`` in every stratum, since it is
    right multiplication by the central element ``u^n``.
    """
    n = x.n
    if ctx.n != n:
        raise ValueError(f"rank mismatch: element {n}, context {ctx.n}")
    q = ctx.q(x.ring)
    out: dict = {}
    for D, c in x.terms.items():
        if n % 2 == 0:
            if epsilon_sign(D) != 1:
                raise NotInONError(f"{D!r} is not in O_{n}")
            if D.t == 0:
                continue
        s, R = root_position(n, D)
        if s:
            c = c * q ** s
        out[R] = out[R] + c if R in out else c
    return AlgebraElement(n, x.ring, out)


def jones_basis(n: int) -> list[Diagram]:
    """All root-position diagrams ``[S1, S2, w]``, strata from the top down."""
    out = []
    for tau in reversed(strata(n)):
        rows = enumerate_annular(n, tau)
        for S1 in rows:
            for S2 in rows:
                out.extend(Diagram(S1, S2, w) for w in window(n, S1, S2))
    return out
