"""Cell modules ``W(tau)`` and their representation matrices.

A basis vector ``C_S`` is the anchor diagram ``[S, T_std, base(S)]``.  A
diagram ``X`` acts by composition: fewer strands give 0, otherwise
``beta * [S', T_std, w']`` becomes ``beta * alpha^((w' - base(S')) / delta) C_S'``.

Flavor DN uses ``delta = 1`` and ``base = 0``.  Flavors ON and TL use
``delta = 2`` and ``base = r(S, T_std)`` so every anchor has even parity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from ..algebra import AlgebraElement, Flavor, RelationReport, member
from ..annular import enumerate_annular, standard_base
from ..diagram import Diagram, compose, epsilon_sign, generator_e, generator_u, r_offset
from ..scalars import QQ, ZZA, LaurentPoly, Ring
from . import linalg
from .jones import alpha_power

__all__ = ["CellModule", "cell_module_matrices", "check_module_relations",
           "trivial_matrices", "check_trivial", "module_ring", "InternalError",
           "epsilon_twist_holds", "restriction_holds"]


class InternalError(AssertionError):
    """A winding offset was not divisible by the shift unit."""


def module_ring(alpha) -> Ring:
    return ZZA if alpha is None else QQ


@dataclass
class CellModule:
    n: int
    tau: int
    flavor: Flavor = Flavor.DN
    alpha: Fraction | None = None
    ring: Ring | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.flavor = Flavor(self.flavor)
        if self.alpha is not None:
            self.alpha = Fraction(self.alpha)
            if self.alpha == 0:
                raise ValueError("alpha must be nonzero")
        if self.ring is None:
            self.ring = module_ring(self.alpha)
        if not 1 <= self.tau <= self.n or (self.n - self.tau) % 2:
            raise ValueError(f"no stratum tau={self.tau} in rank {self.n}")
        if self.n % 2 == 0 and self.tau < 2:
            raise ValueError("even rank needs tau >= 2")

    @property
    def delta(self) -> int:
        return 1 if self.flavor is Flavor.DN else 2

    @cached_property
    def anchor(self) -> tuple:
        return standard_base(self.n, self.tau)

    @cached_property
    def basis(self) -> tuple:
        return enumerate_annular(self.n, self.tau)

    @cached_property
    def index(self) -> dict:
        return {S: i for i, S in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def base(self, S: tuple) -> int:
        return 0 if self.flavor is Flavor.DN else r_offset(S, self.anchor)

    def vector(self, S: tuple) -> Diagram:
        return Diagram(S, self.anchor, self.base(S))

    def alpha_pow(self, k: int) -> LaurentPoly:
        return alpha_power(self.ring, self.alpha, k)

    def act_diagram(self, X: Diagram) -> list[list[LaurentPoly]]:
        if X in self._cache:
            return self._cache[X]
        # TL-modules also carry u^2, so both even flavors accept all of O_n
        if not member(X, Flavor.DN if self.flavor is Flavor.DN else Flavor.ON):
            raise ValueError(f"{X!r} has odd parity; not in O_{self.n}")
        m = linalg.zeros(self.ring, self.dim, self.dim)
        two = self.ring.two()
        for col, S in enumerate(self.basis):
            x, C = compose(X, self.vector(S))
            if C.t < self.tau:
                continue
            assert C.bot == self.anchor, "bottom row changed"
            off = C.w - self.base(C.top)
            if off % self.delta:
                raise InternalError(f"offset {off} not divisible by {self.delta}")
            m[self.index[C.top]][col] = two ** x * self.alpha_pow(off // self.delta)
        self._cache[X] = m
        return m

    def act(self, x: AlgebraElement) -> list[list[LaurentPoly]]:
        m = linalg.zeros(self.ring, self.dim, self.dim)
        for D, c in x.terms.items():
            if c.ring != self.ring:
                c = LaurentPoly(self.ring, {k: self.ring.coerce(y) for k, y in c.terms.items()})
            a = self.act_diagram(D)
            m = [[y + c * z for y, z in zip(ry, rz)] for ry, rz in zip(m, a)]
        return m

    def generator_diagrams(self) -> dict[str, Diagram]:
        gens = {f"E{i}": generator_e(self.n, i) for i in range(1, self.n + 1)}
        if self.flavor is Flavor.DN:
            gens["u"] = generator_u(self.n, 1)
            gens["u^-1"] = generator_u(self.n, -1)
        else:
            gens["u^2"] = generator_u(self.n, 2)
            gens["u^-2"] = generator_u(self.n, -2)
        return gens

    def matrices(self) -> dict[str, list]:
        return {k: self.act_diagram(D) for k, D in self.generator_diagrams().items()}

    def central_scalar(self) -> tuple[str, int, LaurentPoly]:
        """The power of the rotation acting as a scalar and that scalar."""
        if self.flavor is Flavor.DN:
            return "u", self.n, self.alpha_pow(self.tau)
        if self.n % 2:
            return "u^2", self.n, self.alpha_pow(self.tau)
        return "u^2", self.n // 2, self.alpha_pow(self.tau // 2)

    def to_json(self) -> dict:
        return {
            "n": self.n, "tau": self.tau, "flavor": self.flavor.value,
            "alpha": "symbolic" if self.alpha is None else str(self.alpha),
            "ring": str(self.ring), "delta": self.delta, "dim": self.dim,
            "anchor": list(self.anchor),
            "basis": [list(S) for S in self.basis],
            "matrices": {k: [[c.to_json() for c in row] for row in m]
                         for k, m in sorted(self.matrices().items())},
        }


def cell_module_matrices(n: int, tau: int, flavor=Flavor.DN, alpha=None) -> dict[str, list]:
    return CellModule(n, tau, Flavor(flavor), alpha).matrices()


def _word(mats, names, ring, size):
    out = linalg.eye(ring, size)
    for nm in names:
        out = linalg.matmul(out, mats[nm])
    return out


def check_module_relations(mod: CellModule) -> RelationReport:
    """Defining relations of the source algebra on the module matrices."""
    n, ring = mod.n, mod.ring
    rep = RelationReport(n)
    mats = mod.matrices()
    size = mod.dim
    I = linalg.eye(ring, size)
    two = ring.two()

    def e(i):
        return f"E{(i - 1) % n + 1}"

    def eq(a, b):
        return linalg.is_zero(linalg.matsub(a, b))

    def w(*names):
        return _word(mats, names, ring, size)

    for i in range(1, n + 1):
        rep.add("1", f"E{i}^2 = [2]E{i}", eq(w(e(i), e(i)), linalg.scale(mats[e(i)], two)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (j - i) % n not in (1, n - 1):
                rep.add("2", f"E{i}E{j} = E{j}E{i}", eq(w(e(i), e(j)), w(e(j), e(i))))
    for i in range(1, n + 1):
        for d in (1, -1):
            rep.add("3", f"E{i}E{e(i + d)[1:]}E{i} = E{i}", eq(w(e(i), e(i + d), e(i)), mats[e(i)]))

    if mod.flavor is Flavor.DN:
        for i in range(1, n + 1):
            rep.add("4", f"uE{i}u^-1 = E{e(i + 1)[1:]}", eq(w("u", e(i), "u^-1"), mats[e(i + 1)]))
        ue1 = w("u", "E1")
        lhs = linalg.matpow(ue1, n - 1, ring)
        rhs = linalg.matmul(linalg.matpow(mats["u"], n, ring), ue1)
        rep.add("5", f"(uE1)^{n - 1} = u^{n}(uE1)", eq(lhs, rhs))
        rep.add("inv", "u u^-1 = 1", eq(w("u", "u^-1"), I) and eq(w("u^-1", "u"), I))
    else:
        for i in range(1, n + 1):
            rep.add("4'", f"u^2E{i}u^-2 = E{e(i + 2)[1:]}",
                    eq(w("u^2", e(i), "u^-2"), mats[e(i + 2)]))
        for i in range(1, n + 1):
            names = [e(i + k) for k in range(2, n + 1)]
            rep.add("L", f"{''.join(names)} = u^2E{i}", eq(w(*names), w("u^2", e(i))))
        rep.add("inv", "u^2 u^-2 = 1", eq(w("u^2", "u^-2"), I) and eq(w("u^-2", "u^2"), I))

    name, power, scalar = mod.central_scalar()
    rep.add("central", f"({name})^{power} = {scalar!r} * 1",
            eq(linalg.matpow(mats[name], power, ring), linalg.scale(I, scalar)))

    # shifting the winding of any diagram by delta multiplies its action by alpha
    a = mod.alpha_pow(1)
    ok = True
    for S1 in mod.basis:
        for S2 in mod.basis:
            for w0 in (0, 1):
                D = Diagram(S1, S2, w0)
                if mod.delta == 2 and epsilon_sign(D) != 1:
                    continue
                shifted = mod.act_diagram(Diagram(S1, S2, w0 + mod.delta))
                ok &= eq(shifted, linalg.scale(mod.act_diagram(D), a))
    rep.add("scalar", f"action(w + {mod.delta}) = alpha * action(w)", ok)
    return rep


def trivial_matrices(n: int, ring: Ring = ZZA) -> dict[str, list]:
    """The one-dimensional TL-module: identity to 1, every ``E_i`` to 0."""
    mats = {f"E{i}": [[ring.zero()]] for i in range(1, n + 1)}
    mats["1"] = [[ring.one()]]
    return mats


def check_trivial(n: int, ring: Ring = ZZA) -> bool:
    m = trivial_matrices(n, ring)
    two = ring.two()
    for i in range(1, n + 1):
        a = m[f"E{i}"]
        if not linalg.is_zero(linalg.matsub(linalg.matmul(a, a), linalg.scale(a, two))):
            return False
        for j in range(1, n + 1):
            b = m[f"E{j}"]
            if (j - i) % n not in (0, 1, n - 1) and not linalg.is_zero(
                    linalg.matsub(linalg.matmul(a, b), linalg.matmul(b, a))):
                return False
            if (j - i) % n in (1, n - 1) and not linalg.is_zero(
                    linalg.matsub(linalg.matmul(linalg.matmul(a, b), a), a)):
                return False
    return m["1"] == [[ring.one()]]


def epsilon_twist_holds(n: int, tau: int, alpha) -> bool:
    """Odd rank: ``psi_{-alpha}(g) = P psi_alpha(eps(g)) P^-1`` on the generators.

    ``P = diag((-1)^r(S, T_std))`` matches the two anchor conventions.
    """
    alpha = Fraction(alpha)
    plus = CellModule(n, tau, Flavor.DN, alpha)
    minus = CellModule(n, tau, Flavor.DN, -alpha)
    sign = [(-1) ** r_offset(S, plus.anchor) for S in plus.basis]
    for D in plus.generator_diagrams().values():
        eps = epsilon_sign(D)
        m = plus.act_diagram(D)
        twisted = [[m[i][j] * (eps * sign[i] * sign[j]) for j in range(plus.dim)]
                   for i in range(plus.dim)]
        if twisted != minus.act_diagram(D):
            return False
    return True


def restriction_holds(n: int, tau: int, alpha) -> bool:
    """Odd rank: the ON-module at ``alpha^2`` is the DN-module at ``alpha`` restricted.

    The bases differ by ``D = diag(alpha^r(S, T_std))``.
    """
    alpha = Fraction(alpha)
    dn = CellModule(n, tau, Flavor.DN, alpha)
    on = CellModule(n, tau, Flavor.ON, alpha * alpha)
    d = [dn.alpha_pow(r_offset(S, dn.anchor)) for S in dn.basis]
    d_inv = [x.inverse() for x in d]
    return all(linalg.conjugate_diag(dn.act_diagram(D), d, d_inv) == on.act_diagram(D)
               for D in on.generator_diagrams().values())
