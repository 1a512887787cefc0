"""Cell datum of ``J_q(n)`` at rational ``alpha`` and its verification.

For a stratum with window size ``t`` the roots of ``x^t - q`` are
``r_i = zeta_t^i * alpha``.  With ``f_j = prod_{i > j} (x - r_i)`` the datum is

    C^{t,j}_{S,T} = sum_i [x^i] f_j * [S, T*, b(S, T*) + delta * i]

where ``b`` is the base winding of the pair.  Odd rank uses ``b = 0``.  In
even rank the window offset ``r(S, T*)`` makes the extracted structure
constants depend on ``T``, so the default there is the additive base
``c(S) + c(T*)`` (``c`` counts a row's arcs crossing the seam), which agrees
with ``r`` mod 2.  ``base="window"`` keeps ``r`` for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import AlgebraElement, E, U
from ..annular import enumerate_annular, star_involution
from ..diagram import Diagram, _crossings, lift_row, r_offset, star_diagram
from ..scalars import Ring, elementary_coefficients, roots_of_t_th_power
from .jones import JonesContext, jones_basis, jones_reduce, strata, window
from .linalg import rank_field

__all__ = ["base_winding", "cell_datum", "verify_cellularity", "CellularityReport",
           "datum_generators", "row_seam_crossings", "BASES"]


BASES = ("additive", "window")


def row_seam_crossings(S: tuple) -> int:
    """Arcs of a row (with through-strands) that cross the seam."""
    n = len(S)
    return sum(_crossings(i, p, n, 0) for i, p in enumerate(lift_row(S), 1) if p > i)


def base_winding(S1: tuple, S2: tuple, base: str = "additive") -> int:
    if len(S1) % 2:
        return 0
    if base == "window":
        return r_offset(S1, S2)
    if base == "additive":
        return row_seam_crossings(S1) + row_seam_crossings(S2)
    raise ValueError(f"unknown base {base!r}")


def _ring_for(ctx: JonesContext) -> Ring:
    return Ring.cyclotomic(ctx.t)


def _f_coeffs(ctx: JonesContext) -> dict[int, list]:
    roots = roots_of_t_th_power(ctx.t, ctx.alpha)
    return {j: elementary_coefficients(ctx.t, j, roots) for j in range(1, ctx.t + 1)}


def cell_datum(ctx: JonesContext, j: int, base: str = "additive") -> dict[tuple, AlgebraElement]:
    """All ``C^{t,j}_{S,T}`` for ``S, T`` in ``Ann(n) & I(tau)``, keyed by ``(S, T)``."""
    if ctx.alpha is None:
        raise ValueError("the cell datum needs a rational alpha")
    if not 1 <= j <= ctx.t:
        raise ValueError(f"j={j} out of range 1..{ctx.t}")
    ring = _ring_for(ctx)
    coeffs = _f_coeffs(ctx)[j]
    M = enumerate_annular(ctx.n, ctx.tau)
    out = {}
    for S in M:
        for T in M:
            Ts = star_involution(T)
            b = base_winding(S, Ts, base)
            out[S, T] = AlgebraElement(ctx.n, ring, {
                Diagram(S, Ts, b + ctx.delta * i): c for i, c in enumerate(coeffs) if c})
    return out


def datum_generators(n: int, ring: Ring) -> dict[str, AlgebraElement]:
    gens = {f"E{i}": E(n, i, ring) for i in range(1, n + 1)}
    d = 1 if n % 2 else 2
    name = "u" if d == 1 else "u^2"
    gens[name] = U(n, d, ring)
    gens[name + "^-1" if d == 1 else "u^-2"] = U(n, -d, ring)
    return gens


@dataclass
class CellularityReport:
    n: int
    alpha: Fraction
    base: str = "additive"
    conditions: dict = field(default_factory=lambda: {"1": [], "2": [], "3": []})

    def fail(self, cond: str, msg: str):
        self.conditions[cond].append(msg)

    @property
    def ok(self) -> bool:
        return not any(self.conditions.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha": str(self.alpha),
            "base": self.base,
            "ok": self.ok,
            "conditions": {k: {"ok": not v, "failures": v[:20], "failure_count": len(v)}
                           for k, v in sorted(self.conditions.items())},
        }


def _solve_in_f_basis(vec: list, coeffs: dict[int, list], t: int) -> dict[int, object]:
    """Write ``sum_i vec[i] x^i`` (degree < t) as ``sum_j c_j f_j``."""
    vec = list(vec)
    out = {}
    for j in range(1, t + 1):
        deg = t - j
        c = vec[deg]
        out[j] = c
        if c:
            for i, fc in enumerate(coeffs[j]):
                if fc:
                    vec[i] = vec[i] - c * fc
    assert not any(vec), "residual after triangular solve"
    return out


def verify_cellularity(n: int, alpha, max_n: int = 6, base: str = "additive") -> CellularityReport:
    """Check cellular conditions 1-3 exhaustively for ``J_q(n)``."""
    if n > max_n:
        raise ValueError(f"n={n} exceeds the bound {max_n}")
    alpha = Fraction(alpha)
    rep = CellularityReport(n, alpha, base)
    total = 0
    for tau in strata(n):
        ctx = JonesContext(n, tau, alpha)
        t, d = ctx.t, ctx.delta
        ring = _ring_for(ctx)
        q = ctx.q(ring)
        coeffs = _f_coeffs(ctx)
        M = enumerate_annular(n, tau)
        data = {j: cell_datum(ctx, j, base) for j in range(1, t + 1)}
        total += t * len(M) ** 2

        # 1: the images of the (S, T) block span its root positions
        for S in M:
            for T in M:
                Ts = star_involution(T)
                positions = [Diagram(S, Ts, w) for w in window(n, S, Ts)]
                rows = []
                for j in range(1, t + 1):
                    C = jones_reduce(data[j][S, T], ctx)
                    if set(C.terms) - set(positions):
                        rep.fail("1", f"tau={tau} j={j} {S},{T}: support leaves the block")
                    row = [C.terms.get(D, ring.zero()) for D in positions]
                    if any(set(r.terms) - {(0, 0)} for r in row if r):
                        rep.fail("1", f"tau={tau} j={j} {S},{T}: non-constant coefficient")
                    rows.append([r.coefficient(0, 0) if r else 0 for r in row])
                if rank_field(rows) != t:
                    rep.fail("1", f"tau={tau} {S},{T}: block rank deficient")

        # 2: the anti-involution swaps the indices
        for j, Cs in data.items():
            for (S, T), C in Cs.items():
                starred = AlgebraElement(n, ring, {star_diagram(D): c for D, c in C.terms.items()})
                if starred != Cs[T, S]:
                    rep.fail("2", f"tau={tau} j={j}: C({S},{T})* != C({T},{S})")

        # 3: left action, modulo lower cells, independent of T
        for name, a in datum_generators(n, ring).items():
            for j in range(1, t + 1):
                for S in M:
                    seen = None
                    for T in M:
                        Ts = star_involution(T)
                        prod = jones_reduce(a * data[j][S, T], ctx)
                        vecs: dict = {}
                        bad = False
                        for D, c in prod.terms.items():
                            if D.t < tau:
                                continue
                            if D.bot != Ts:
                                rep.fail("3", f"{name} tau={tau}: bottom row changed")
                                bad = True
                                continue
                            off = D.w - base_winding(D.top, Ts, base)
                            if off % d:
                                rep.fail("3", f"{name} tau={tau}: offset {off} not divisible")
                                bad = True
                                continue
                            s, i = divmod(off // d, t)
                            if s:
                                c = c * q ** s
                            vec = vecs.setdefault(D.top, [ring.zero()] * t)
                            vec[i] = vec[i] + c
                        if bad:
                            continue
                        sig = {}
                        for Sp, vec in vecs.items():
                            comp = _solve_in_f_basis(vec, coeffs, t)
                            if any(comp[jp] for jp in range(j + 1, t + 1)):
                                rep.fail("3", f"{name} tau={tau} j={j} {S},{T}: "
                                              f"component above j for {Sp}")
                            if comp[j]:
                                sig[Sp] = comp[j]
                        if seen is None:
                            seen = sig
                        elif sig != seen:
                            rep.fail("3", f"{name} tau={tau} j={j} S={S}: "
                                          f"r_a depends on T (at T={T})")
    size = len(jones_basis(n))
    if total != size:
        rep.fail("1", f"datum has {total} elements, basis has {size}")
    return rep
