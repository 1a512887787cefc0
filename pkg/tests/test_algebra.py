import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affinetl.algebra import (AlgebraElement, E, Flavor, U, apply_epsilon, check_central,
                              check_presentation, decompose_on, in_ideal, member, one)
from affinetl.diagram import Diagram, epsilon_sign, generator_u
from affinetl.scalars import ZZ, ZZA, RingMismatchError
from helpers import all_diagrams


def elements(n, size=3):
    coeff = st.integers(-3, 3).map(lambda c: ZZ.const(c)) | st.integers(-2, 2).map(ZZ.v)
    return st.dictionaries(st.sampled_from(all_diagrams(n, 2, 1)), coeff, max_size=size).map(
        lambda d: AlgebraElement(n, ZZ, d))


ranks = st.sampled_from([3, 4, 5])


@pytest.mark.parametrize("n", range(3, 8))
def test_presentation_holds(n):
    rep = check_presentation(n)
    assert rep.ok, [r for r in rep.items if not r["ok"]]
    families = {r["family"] for r in rep.items}
    assert families >= {"1", "2", "3", "4", "5", "L", "inv"}


def test_presentation_notes_vacuous_family_at_rank_three():
    rep = check_presentation(3)
    (fam2,) = [r for r in rep.items if r["family"] == "2"]
    assert "vacuous" in fam2["note"]


@pytest.mark.parametrize("n", range(3, 8))
def test_u_to_the_n_is_central(n):
    assert check_central(n)


@settings(max_examples=60, deadline=None)
@given(ranks.flatmap(lambda n: st.tuples(elements(n), elements(n), elements(n))))
def test_multiplication_is_associative_and_distributive(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@settings(max_examples=60, deadline=None)
@given(ranks.flatmap(lambda n: st.tuples(elements(n), elements(n))))
def test_epsilon_is_a_multiplicative_involution(xy):
    x, y = xy
    assert apply_epsilon(x * y) == apply_epsilon(x) * apply_epsilon(y)
    assert apply_epsilon(apply_epsilon(x)) == x


@settings(max_examples=60, deadline=None)
@given(ranks.flatmap(elements))
def test_decomposition_reassembles(x):
    a, b = decompose_on(x)
    assert all(member(D, Flavor.ON) for D in a.terms)
    assert all(member(D, Flavor.ON) for D in b.terms)
    assert a + U(x.n, 1) * b == x


@settings(max_examples=60, deadline=None)
@given(ranks.flatmap(elements))
def test_epsilon_fixes_exactly_the_even_part(x):
    a, _ = decompose_on(x)
    assert (apply_epsilon(x) == x) == all(epsilon_sign(D) == 1 for D in x.terms)
    assert apply_epsilon(a) == a


def test_membership():
    n = 5
    assert member(E(n, 1).items()[0][0], Flavor.TL)
    assert not member(generator_u(n, 1), Flavor.ON)
    assert member(generator_u(n, 2), Flavor.ON)
    assert not member(generator_u(n, 2), Flavor.TL)
    assert member(generator_u(n, 0), Flavor.TL)


def test_ideal_filtration():
    n = 4
    x = E(n, 1) * E(n, 3)
    assert in_ideal(x, 0)
    assert not in_ideal(E(n, 1), 0) and in_ideal(E(n, 1), 2)


def test_powers_and_inverses():
    n = 4
    assert U(n, 1) ** 4 == U(n, 4)
    assert U(n, 1) ** -3 == U(n, -3)
    assert (one(n, ZZ).scale(ZZ.v()) * U(n, 2)) ** -1 == one(n).scale(ZZ.v(-1)) * U(n, -2)
    with pytest.raises(ZeroDivisionError):
        E(n, 1) ** -1
    with pytest.raises(ZeroDivisionError):
        one(n).scale(2) ** -1


def test_rings_do_not_mix():
    with pytest.raises(RingMismatchError):
        E(4, 1, ZZ) + E(4, 1, ZZA)
    with pytest.raises(ValueError):
        E(4, 1) * E(5, 1)


def test_json_round_trip():
    x = E(4, 1) * E(4, 2).scale(ZZ.two()) + U(4, -2).scale(3)
    assert AlgebraElement.from_json(x.to_json()) == x
    assert x.to_json() == AlgebraElement.from_json(x.to_json()).to_json()


def test_zero_terms_dropped():
    n = 3
    x = E(n, 1) - E(n, 1)
    assert x == 0 and not x.terms
    D = Diagram((1, 3, 2), (1, 3, 2), 0)
    assert AlgebraElement(n, ZZ, {D: 0}) == 0
