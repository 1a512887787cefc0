"""Linear combinations of diagrams and the subalgebras TL < O < D."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .diagram import (Diagram, compose, diagram_from_json, diagram_to_json,
                      epsilon_sign, generator_e, generator_u, identity)
from .scalars import ZZ, LaurentPoly, Ring, RingMismatchError

__all__ = [
    "Flavor", "AlgebraElement", "member", "decompose_on", "apply_epsilon",
    "strand_count", "in_ideal", "check_presentation", "check_central",
    "RelationReport", "E", "U", "one",
]


class Flavor(enum.Enum):
    DN = "dn"
    ON = "on"
    TL = "tl"


@lru_cache(maxsize=None)
def _two_power(ring: Ring, x: int) -> LaurentPoly:
    return ring.two() ** x


class AlgebraElement:
    """Finite combination of diagram normal forms with coefficients in ``ring``."""

    __slots__ = ("n", "ring", "terms")

    def __init__(self, n: int, ring: Ring = ZZ, terms: dict | None = None):
        self.n = n
        self.ring = ring
        self.terms: dict[Diagram, LaurentPoly] = {}
        for D, c in (terms or {}).items():
            if D.n != n:
                raise ValueError(f"diagram of rank {D.n} in rank-{n} element")
            c = c if isinstance(c, LaurentPoly) else ring.const(c)
            if c.ring != ring:
                raise RingMismatchError(f"{c.ring} coefficient in {ring} element")
            if c:
                self.terms[D] = c

    @classmethod
    def from_diagram(cls, D: Diagram, ring: Ring = ZZ, coeff=1) -> "AlgebraElement":
        return cls(D.n, ring, {D: coeff})

    def _check(self, other: "AlgebraElement"):
        if other.n != self.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for D, c in other.terms.items():
            out[D] = out[D] + c if D in out else c
        return AlgebraElement(self.n, self.ring, out)

    def __neg__(self):
        return AlgebraElement(self.n, self.ring, {D: -c for D, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = c if isinstance(c, LaurentPoly) else self.ring.const(c)
        return AlgebraElement(self.n, self.ring, {D: c * x for D, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            out: dict = {}
            for A, ca in self.terms.items():
                for B, cb in other.terms.items():
                    x, C = compose(A, B)
                    c = ca * cb
                    if x:
                        c = c * _two_power(self.ring, x)
                    out[C] = out[C] + c if C in out else c
            return AlgebraElement(self.n, self.ring, out)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = one(self.n, self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "AlgebraElement":
        """Inverse of ``c * u^m`` for a unit ``c``; anything else raises."""
        if len(self.terms) == 1:
            (D, c), = self.terms.items()
            if D.t == self.n and c.is_unit():
                return AlgebraElement(self.n, self.ring,
                                      {generator_u(self.n, -D.w): c.inverse()})
        raise ZeroDivisionError("only unit multiples of powers of u are invertible")

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.n == other.n and self.ring == other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def items(self) -> list[tuple[Diagram, LaurentPoly]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ring": str(self.ring),
            "terms": [{"diagram": diagram_to_json(D), "coeff": c.to_json()}
                      for D, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraElement":
        ring = Ring.parse(obj["ring"])
        return cls(obj["n"], ring, {diagram_from_json(t["diagram"]): LaurentPoly.from_json(t["coeff"])
                                    for t in obj["terms"]})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{D!r}" for D, c in self.items())


def E(n: int, i: int, ring: Ring = ZZ) -> AlgebraElement:
    return AlgebraElement.from_diagram(generator_e(n, (i - 1) % n + 1), ring)


def U(n: int, m: int = 1, ring: Ring = ZZ) -> AlgebraElement:
    return AlgebraElement.from_diagram(generator_u(n, m), ring)


def one(n: int, ring: Ring = ZZ) -> AlgebraElement:
    return AlgebraElement.from_diagram(identity(n), ring)


# ---------------------------------------------------------------------------

def member(D: Diagram, flavor: Flavor) -> bool:
    if flavor is Flavor.DN:
        return True
    even = epsilon_sign(D) == 1
    if flavor is Flavor.ON:
        return even
    if D.t == D.n:  # no horizontal edges: a power of u
        return D.w == 0
    return even


def decompose_on(x: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """Split ``x = a + u b`` with ``a`` and ``b`` supported on ``O_n``."""
    uinv = generator_u(x.n, -1)
    a, b = {}, {}
    for D, c in x.terms.items():
        if epsilon_sign(D) == 1:
            a[D] = c
        else:
            loops, rest = compose(uinv, D)
            assert loops == 0
            b[rest] = c
    return AlgebraElement(x.n, x.ring, a), AlgebraElement(x.n, x.ring, b)


def apply_epsilon(x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(x.n, x.ring,
                          {D: (c if epsilon_sign(D) == 1 else -c) for D, c in x.terms.items()})


def strand_count(D: Diagram) -> int:
    return D.t


def in_ideal(x: AlgebraElement, t: int) -> bool:
    """Membership in the span of diagrams with at most ``t`` through-strands."""
    return all(D.t <= t for D in x.terms)


# ---------------------------------------------------------------------------

@dataclass
class RelationReport:
    n: int
    items: list = field(default_factory=list)

    def add(self, family: str, name: str, ok: bool, note: str = ""):
        entry = {"family": family, "relation": name, "ok": bool(ok)}
        if note:
            entry["note"] = note
        self.items.append(entry)

    @property
    def ok(self) -> bool:
        return all(it["ok"] for it in self.items)

    def to_json(self) -> dict:
        return {"n": self.n, "ok": self.ok, "relations": self.items}


def _prod(factors, n, ring):
    out = one(n, ring)
    for f in factors:
        out = out * f
    return out


def check_presentation(n: int, ring: Ring = ZZ) -> RelationReport:
    """Verify the defining relations of the affine algebra in diagram arithmetic."""
    if n < 3:
        raise ValueError("rank must be at least 3")
    rep = RelationReport(n)
    Es = {i: E(n, i, ring) for i in range(1, n + 1)}
    u, uinv = U(n, 1, ring), U(n, -1, ring)
    two = ring.two()

    def e(i):
        return Es[(i - 1) % n + 1]

    for i in range(1, n + 1):
        rep.add("1", f"E{i}^2 = [2]E{i}", e(i) * e(i) == e(i) * two)

    nonadjacent = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                   if (j - i) % n not in (1, n - 1)]
    if not nonadjacent:
        rep.add("2", "EiEj = EjEi (non-adjacent)", True, "vacuous: every pair is adjacent")
    for i, j in nonadjacent:
        rep.add("2", f"E{i}E{j} = E{j}E{i}", e(i) * e(j) == e(j) * e(i))

    for i in range(1, n + 1):
        for d in (1, -1):
            j = (i + d - 1) % n + 1
            rep.add("3", f"E{i}E{j}E{i} = E{i}", e(i) * e(j) * e(i) == e(i))

    for i in range(1, n + 1):
        j = i % n + 1
        rep.add("4", f"uE{i}u^-1 = E{j}", u * e(i) * uinv == e(j))

    ue1 = u * e(1)
    rep.add("5", f"(uE1)^{n - 1} = u^{n}(uE1)", ue1 ** (n - 1) == U(n, n, ring) * ue1)

    u2 = U(n, 2, ring)
    for i in range(1, n + 1):
        word = [e(i + k) for k in range(2, n + 1)]
        names = "".join(f"E{(i + k - 1) % n + 1}" for k in range(2, n + 1))
        rep.add("L", f"{names} = u^2E{i}", _prod(word, n, ring) == u2 * e(i))

    rep.add("inv", "u u^-1 = 1 = u^-1 u", u * uinv == one(n, ring) == uinv * u)
    return rep


def check_central(n: int, ring: Ring = ZZ) -> bool:
    """``u^n`` commutes with every generator ``E_i``, ``u`` and ``u^-1``."""
    un = U(n, n, ring)
    gens = [E(n, i, ring) for i in range(1, n + 1)] + [U(n, 1, ring), U(n, -1, ring)]
    return all(un * g == g * un for g in gens)
