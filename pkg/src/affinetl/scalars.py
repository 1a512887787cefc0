"""Exact coefficient arithmetic.

Three layers:

* rationals, via :class:`fractions.Fraction`;
* :class:`CycloRational`, elements of ``Q(zeta_m)`` stored as coefficient
  vectors reduced modulo the m-th cyclotomic polynomial;
* :class:`LaurentPoly`, sparse Laurent polynomials in ``v`` and (optionally)
  ``alpha`` whose coefficients live in one of the above.

A :class:`Ring` names the coefficient domain and the variable set.  Values of
different rings never mix silently; doing so raises :class:`RingMismatchError`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

__all__ = [
    "RingMismatchError", "Ring", "ZZ", "ZZA", "QQ", "CycloRational",
    "LaurentPoly", "cyclotomic_polynomial", "euler_phi",
    "roots_of_t_th_power", "elementary_coefficients", "poly_from_roots",
]


class RingMismatchError(ValueError):
    """Operands belong to different rings."""


Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q, low degree first

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in a]
    _trim(r)
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(r) >= len(b):
        c = r[-1] / lead
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        _trim(r)
    return _trim(q), r


def _pinverse_mod(a: list, m: list) -> list:
    """Inverse of ``a`` modulo ``m`` by the extended Euclidean algorithm."""
    r0, r1 = [Fraction(x) for x in m], [Fraction(x) for x in a]
    s0, s1 = [], [Fraction(1)]
    _trim(r1)
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    c = r0[0]
    return [x / c for x in s0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the m-th cyclotomic polynomial.

    Uses ``x^m - 1 = prod_{d | m} Phi_d``.
    """
    if m < 1:
        raise ValueError("order must be positive")
    p = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            p, r = _pdivmod(p, list(cyclotomic_polynomial(d)))
            assert not r
    assert all(c.denominator == 1 for c in p)
    return tuple(int(c) for c in p)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


# ---------------------------------------------------------------------------

class CycloRational:
    """An element of ``Q(zeta_m)``, reduced modulo ``Phi_m``."""

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs: Iterable = ()):
        phi = cyclotomic_polynomial(m)
        c = [_frac(x) for x in coeffs]
        if len(c) >= len(phi):
            _, c = _pdivmod(c, list(phi))
        d = len(phi) - 1
        c = c + [Fraction(0)] * (d - len(c))
        self.m = m
        self.coeffs = tuple(c)
        self._hash = None

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "CycloRational":
        power %= m
        return cls(m, [0] * power + [1])

    @classmethod
    def rational(cls, m: int, x: Rational) -> "CycloRational":
        return cls(m, [x])

    def _coerce(self, other) -> "CycloRational":
        if isinstance(other, CycloRational):
            if other.m != self.m:
                raise RingMismatchError(f"Q(zeta{self.m}) vs Q(zeta{other.m})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloRational(self.m, [other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloRational(self.m, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloRational(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloRational(self.m, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloRational(self.m, _pmul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycloRational":
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        return CycloRational(self.m, _pinverse_mod(list(self.coeffs),
                                                   list(cyclotomic_polynomial(self.m))))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloRational(self.m, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, CycloRational):
            return self.m == other.m and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.m, self.coeffs))
        return self._hash

    def to_json(self) -> list:
        return [_rat_json(c) for c in self.coeffs]

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mon = "" if i == 0 else (f"z{self.m}" if i == 1 else f"z{self.m}^{i}")
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"({c})*{mon}")
        return " + ".join(parts) if parts else "0"


def _rat_json(c: Fraction):
    c = _frac(c)
    if c.denominator == 1:
        return int(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _rat_from_json(x) -> Fraction:
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(x)


def roots_of_t_th_power(t: int, alpha: Rational) -> list[CycloRational]:
    """The roots ``zeta_t^i * alpha`` (i = 1..t) of ``x^t - alpha^t``."""
    if t < 1:
        raise ValueError("t must be positive")
    alpha = _frac(alpha)
    if alpha == 0:
        raise ValueError("degenerate root: alpha = 0")
    return [CycloRational.zeta(t, i) * alpha for i in range(1, t + 1)]


def poly_from_roots(roots: list) -> list:
    """Coefficients (low degree first) of ``prod (x - r)``."""
    out = [1]
    for r in roots:
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - r * c
        out = nxt
    return out


def elementary_coefficients(t: int, j: int, roots: list) -> list:
    """Coefficients of ``f_j(x) = prod_{i > j} (x - r_i)``, low degree first.

    ``roots`` is ``[r_1, ..., r_t]``; ``f_t`` is the empty product ``1``.
    """
    if not 0 <= j <= t:
        raise ValueError(f"j={j} out of range 0..{t}")
    if len(roots) != t:
        raise ValueError("need exactly t roots")
    return poly_from_roots(roots[j:])


# ---------------------------------------------------------------------------

_DESC_RE = re.compile(r"^(ZZ|QQ|QQ\(zeta(\d+)\))\[v(,alpha)?\]$")


@dataclass(frozen=True)
class Ring:
    """Coefficient domain plus variable set of a :class:`LaurentPoly`.

    ``base`` is ``"ZZ"``, ``"QQ"`` or ``"CYC"`` (with ``order`` m).
    """

    base: str = "ZZ"
    order: int = 0
    alpha: bool = False

    def __post_init__(self):
        if self.base not in ("ZZ", "QQ", "CYC"):
            raise ValueError(f"unknown base {self.base!r}")
        if (self.base == "CYC") != (self.order > 0):
            raise ValueError("cyclotomic rings need a positive order")

    @classmethod
    def cyclotomic(cls, m: int, alpha: bool = False) -> "Ring":
        return cls("CYC", m, alpha)

    @classmethod
    def parse(cls, desc: str) -> "Ring":
        mt = _DESC_RE.match(desc.replace(" ", ""))
        if not mt:
            raise ValueError(f"bad ring descriptor {desc!r}")
        alpha = mt.group(3) is not None
        if mt.group(2):
            return cls("CYC", int(mt.group(2)), alpha)
        return cls(mt.group(1), 0, alpha)

    def __str__(self):
        base = f"QQ(zeta{self.order})" if self.base == "CYC" else self.base
        return base + ("[v,alpha]" if self.alpha else "[v]")

    def coerce(self, c):
        if self.base == "ZZ":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise RingMismatchError(f"{c} is not an integer")
                return int(c.numerator)
            if isinstance(c, int):
                return c
        elif self.base == "QQ":
            if isinstance(c, (int, Fraction)):
                return Fraction(c)
        else:
            if isinstance(c, (int, Fraction)):
                return CycloRational(self.order, [c])
            if isinstance(c, CycloRational):
                if c.m != self.order:
                    raise RingMismatchError(f"Q(zeta{c.m}) coefficient in {self}")
                return c
        raise RingMismatchError(f"cannot coerce {c!r} into {self}")

    def const(self, c) -> "LaurentPoly":
        return LaurentPoly(self, {(0, 0): self.coerce(c)})

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.const(1)

    def v(self, k: int = 1) -> "LaurentPoly":
        return LaurentPoly(self, {(k, 0): self.coerce(1)})

    def alpha_power(self, k: int = 1) -> "LaurentPoly":
        if not self.alpha and k != 0:
            raise RingMismatchError(f"{self} has no alpha")
        return LaurentPoly(self, {(0, k): self.coerce(1)})

    def two(self) -> "LaurentPoly":
        """The quantum integer ``[2] = v + v^-1``."""
        return LaurentPoly(self, {(1, 0): self.coerce(1), (-1, 0): self.coerce(1)})

    def coeff_to_json(self, c):
        if self.base == "CYC":
            return c.to_json()
        if self.base == "QQ":
            return _rat_json(c)
        return int(c)

    def coeff_from_json(self, x):
        if self.base == "CYC":
            return CycloRational(self.order, [_rat_from_json(y) for y in x])
        if self.base == "QQ":
            return _rat_from_json(x)
        return int(x)


ZZ = Ring("ZZ")
ZZA = Ring("ZZ", alpha=True)
QQ = Ring("QQ")


class LaurentPoly:
    """Sparse Laurent polynomial; ``terms`` maps ``(e_v, e_alpha)`` to a coefficient.

    Instances are treated as immutable.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {k: c for k, c in terms.items() if c}
        if not ring.alpha and any(k[1] for k in self.terms):
            raise RingMismatchError(f"alpha term in {ring}")
        self._hash = None

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction, CycloRational)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out[k] + c if k in out else c
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in o.terms.items():
                k = (a1 + a2, b1 + b2)
                p = c1 * c2
                out[k] = out[k] + p if k in out else p
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """True for invertible elements: a monomial with a unit coefficient."""
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        if self.ring.base == "ZZ":
            return c in (1, -1)
        return True

    def inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit")
        ((a, b), c), = self.terms.items()
        inv = c if self.ring.base == "ZZ" else 1 / c
        return LaurentPoly(self.ring, {(-a, -b): inv})

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, CycloRational)):
            if not other:
                return not self.terms
            return self.terms == {(0, 0): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def coefficient(self, ev: int = 0, ea: int = 0):
        return self.terms.get((ev, ea), self.ring.coerce(0))

    def specialize(self, v=None, alpha=None):
        """Substitute rational values for ``v`` and/or ``alpha``.

        Returns a plain number when both variables are substituted (or absent),
        otherwise a :class:`LaurentPoly` in a ring over ``QQ``.
        """
        need_alpha = self.ring.alpha and alpha is None
        if v is not None and not need_alpha:
            total = self.ring.coerce(0)
            for (a, b), c in self.terms.items():
                total = total + c * Fraction(v) ** a * (Fraction(alpha) ** b if b else 1)
            return total
        ring = Ring("QQ" if self.ring.base != "CYC" else "CYC", self.ring.order,
                    need_alpha)
        out: dict = {}
        for (a, b), c in self.terms.items():
            c = ring.coerce(c if not isinstance(c, int) else Fraction(c))
            if v is not None:
                c = c * Fraction(v) ** a
                a = 0
            if alpha is not None:
                c = c * Fraction(alpha) ** b
                b = 0
            k = (a, b)
            out[k] = out[k] + c if k in out else c
        return LaurentPoly(ring, out)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "terms": [[a, b, self.ring.coeff_to_json(c)] for (a, b), c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentPoly":
        ring = Ring.parse(obj["ring"])
        return cls(ring, {(int(a), int(b)): ring.coeff_from_json(c) for a, b, c in obj["terms"]})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            mon = []
            if a:
                mon.append("v" if a == 1 else f"v^{a}")
            if b:
                mon.append("alpha" if b == 1 else f"alpha^{b}")
            cs = repr(c) if isinstance(c, CycloRational) else str(c)
            if isinstance(c, CycloRational) and sum(1 for x in c.coeffs if x) > 1:
                cs = f"({cs})"
            if not mon:
                parts.append(cs)
            elif c == 1:
                parts.append("*".join(mon))
            elif c == -1:
                parts.append("-" + "*".join(mon))
            else:
                parts.append(cs + "*" + "*".join(mon))
        return " + ".join(parts).replace("+ -", "- ")
