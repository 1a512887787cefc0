from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affinetl.scalars import (QQ, ZZ, ZZA, CycloRational, LaurentPoly, Ring, RingMismatchError,
                              cyclotomic_polynomial, elementary_coefficients, euler_phi,
                              poly_from_roots, roots_of_t_th_power)


def laurent(ring):
    key = st.tuples(st.integers(-3, 3), st.integers(-2, 2) if ring.alpha else st.just(0))
    return st.dictionaries(key, st.integers(-4, 4), max_size=4).map(
        lambda d: LaurentPoly(ring, {k: ring.coerce(c) for k, c in d.items()}))


def cyclo(m):
    return st.lists(st.fractions(max_denominator=5).filter(lambda x: abs(x) < 20),
                    min_size=0, max_size=m + 2).map(lambda c: CycloRational(m, c))


@pytest.mark.parametrize("m, expected", [
    (1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomials(m, expected):
    assert cyclotomic_polynomial(m) == expected
    assert len(expected) - 1 == euler_phi(m)


def test_zeta_has_order_m():
    for m in range(1, 13):
        z = CycloRational.zeta(m)
        assert z ** m == 1
        assert all(z ** k != 1 for k in range(1, m))


def test_roots_multiply_to_the_constant_term():
    for t in range(1, 7):
        alpha = Fraction(2, 3)
        roots = roots_of_t_th_power(t, alpha)
        assert roots[-1] == alpha
        coeffs = poly_from_roots(roots)
        # prod (x - r_i) = x^t - alpha^t
        assert coeffs[0] == -(alpha ** t)
        assert coeffs[-1] == 1
        assert all(c == 0 for c in coeffs[1:-1])


def test_elementary_coefficients_ends():
    roots = roots_of_t_th_power(3, 2)
    assert elementary_coefficients(3, 3, roots) == [1]
    f2 = elementary_coefficients(3, 2, roots)
    assert f2[1] == 1 and f2[0] == -roots[2]
    with pytest.raises(ValueError):
        elementary_coefficients(3, 4, roots)


def test_zero_alpha_rejected():
    with pytest.raises(ValueError):
        roots_of_t_th_power(2, 0)


@given(cyclo(5), cyclo(5), cyclo(5))
def test_cyclotomic_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=60)
@given(laurent(ZZA), laurent(ZZA), laurent(ZZA))
def test_laurent_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZZA.zero()
    assert LaurentPoly.from_json(a.to_json()) == a


@given(laurent(ZZ), st.integers(-3, 3), st.integers(-3, 3))
def test_specialize_is_a_homomorphism(a, i, j):
    b = ZZ.v(i) + ZZ.const(j)
    v = Fraction(3, 2)
    assert (a * b).specialize(v=v) == a.specialize(v=v) * b.specialize(v=v)


def test_units_and_inverses():
    assert ZZ.v(3).inverse() == ZZ.v(-3)
    assert (-ZZA.alpha_power(2)).inverse() == -ZZA.alpha_power(-2)
    assert QQ.const(Fraction(2, 7)).inverse() == QQ.const(Fraction(7, 2))
    with pytest.raises(ZeroDivisionError):
        ZZ.two().inverse()
    with pytest.raises(ZeroDivisionError):
        ZZ.const(2).inverse()
    assert ZZ.v() ** -2 == ZZ.v(-2)


def test_ring_descriptors_round_trip():
    for desc in ("ZZ[v]", "ZZ[v,alpha]", "QQ[v]", "QQ(zeta5)[v]", "QQ(zeta3)[v,alpha]"):
        assert str(Ring.parse(desc)) == desc
    with pytest.raises(ValueError):
        Ring.parse("RR[v]")


def test_ring_mismatch_is_reported():
    with pytest.raises(RingMismatchError):
        ZZ.one() + QQ.one()
    with pytest.raises(RingMismatchError):
        ZZ.alpha_power(1)
    with pytest.raises(RingMismatchError):
        CycloRational(3, [1]) + CycloRational(4, [1])


def test_json_of_rationals_and_cyclotomics():
    p = LaurentPoly(Ring.cyclotomic(3), {(1, 0): CycloRational(3, [Fraction(1, 2), -1])})
    obj = p.to_json()
    assert obj == {"ring": "QQ(zeta3)[v]", "terms": [[1, 0, ["1/2", -1]]]}
    assert LaurentPoly.from_json(obj) == p
