import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affinetl.algebra import E, U, one
from affinetl.diagram import Diagram
from affinetl.expr import (Add, ExprEvalError, ExprSyntaxError, Gen, Mul, Neg, Num, Pow, Rot,
                           Sub, Two, Var, evaluate, parse, to_text)
from affinetl.scalars import ZZ, ZZA


def test_products_associate_to_the_left():
    assert parse("E1*E2*E1") == Mul(Mul(Gen(1), Gen(2)), Gen(1))


def test_subtraction_tree():
    assert parse("[2]*E1 - E1^2") == Sub(Mul(Two(), Gen(1)), Pow(Gen(1), 2))


def test_negative_power_on_u():
    assert parse("u^-1 * E1 * u") == Mul(Mul(Pow(Rot(), -1), Gen(1)), Rot())


def test_precedence():
    assert parse("-u^2") == Neg(Pow(Rot(), 2))
    assert parse("1 + v*E2 - alpha") == Sub(Add(Num(1), Mul(Var("v"), Gen(2))), Var("alpha"))
    assert parse("(E1 + E2)^3") == Pow(Add(Gen(1), Gen(2)), 3)
    assert parse("[ 2 ]") == Two()


@pytest.mark.parametrize("text, line, col", [
    ("E1 * ", 1, 6),
    ("E1 $ E2", 1, 4),
    ("E1 +\n  w", 2, 3),
    ("(E1", 1, 4),
    ("E1 E2", 1, 4),
    ("u^x", 1, 3),
])
def test_syntax_errors_carry_positions(text, line, col):
    with pytest.raises(ExprSyntaxError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert f"line {line}, column {col}" in str(info.value)


def test_unknown_name_is_rejected():
    with pytest.raises(ExprSyntaxError, match="unknown token 'q'"):
        parse("q*E1")


def test_canonical_printing():
    corpus = {
        "E1*E2*E1": "E1*E2*E1",
        "E1*(E2*E1)": "E1*(E2*E1)",
        "[2] * E1 - E1 ^ 2": "[2]*E1 - E1^2",
        "u^-1*E1*u": "u^-1*E1*u",
        "(-u)^2 + -(v)": "(-u)^2 + -v",
        "((E3))": "E3",
        "1-(E1-E2)": "1 - (E1 - E2)",
    }
    for text, canon in corpus.items():
        assert to_text(parse(text)) == canon


atoms = st.one_of(
    st.integers(0, 9).map(Num), st.sampled_from([Var("v"), Var("alpha"), Two(), Rot()]),
    st.integers(1, 4).map(Gen))


def _extend(children):
    return st.one_of(
        st.builds(Add, children, children), st.builds(Sub, children, children),
        st.builds(Mul, children, children), st.builds(Neg, children),
        st.builds(Pow, children, st.integers(-2, 3)))


trees = st.recursive(atoms, _extend, max_leaves=8)


@given(trees)
def test_print_then_parse_is_identity(tree):
    assert parse(to_text(tree)) == tree


def _words(n):
    letters = [f"E{i}" for i in range(1, n + 1)] + ["u", "u^-1", "v", "[2]", "1", "2"]
    word = st.lists(st.sampled_from(letters), min_size=1, max_size=4).map("*".join)
    return st.lists(word, min_size=1, max_size=3).map(" + ".join)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4, 5]).flatmap(lambda n: st.tuples(st.just(n), _words(n), _words(n))))
def test_evaluation_is_a_homomorphism(case):
    n, a, b = case
    x, y = evaluate(a, n), evaluate(b, n)
    assert evaluate(f"({a})*({b})", n) == x * y
    assert evaluate(f"({a}) + ({b})", n) == x + y
    assert evaluate(f"({a}) - ({b})", n) == x - y


def test_worked_examples():
    assert evaluate("[2]*E1 - E1^2", 4) == 0
    assert evaluate("u^-1*E1*u", 4) == E(4, 4)
    (term,) = evaluate("u^4", 4).terms
    assert term == Diagram((1, 2, 3, 4), (1, 2, 3, 4), 4)
    assert evaluate("E1*E2*E1", 5) == evaluate("E1", 5)


def test_scalars():
    assert evaluate("v^-2*E1", 3) == E(3, 1).scale(ZZ.v(-2))
    assert evaluate("-3", 4) == one(4).scale(-3)
    assert evaluate("alpha*u", 3, "ZZ[v,alpha]") == U(3, 1, ZZA).scale(ZZA.alpha_power(1))
    assert evaluate("E2", 3, ZZA).ring == ZZA


def test_alpha_needs_a_ring_with_alpha():
    with pytest.raises(ExprEvalError, match="alpha"):
        evaluate("alpha*E1", 3)


def test_evaluation_errors():
    with pytest.raises(ExprEvalError, match="out of range"):
        evaluate("E5", 4)
    with pytest.raises(ExprEvalError, match="non-invertible"):
        evaluate("E1^-1", 4)
    with pytest.raises(ExprEvalError):
        evaluate("(1 + u)^-1", 4)
    assert evaluate("(v*u^2)^-1", 4).terms == {Diagram((1, 2, 3, 4), (1, 2, 3, 4), -2): ZZ.v(-1)}
