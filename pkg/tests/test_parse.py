import warnings

import pytest

from polymat import ImplicitVariablesWarning, MonomialIdeal, ParseError, VariableSet, parse_ideal
from polymat.parse import parse_variables


def test_exam_c2_implicit_vars():
    with pytest.warns(ImplicitVariablesWarning):
        I = parse_ideal("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)")
    assert I.vars == VariableSet.standard(3)
    assert I.gens == ((3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1))


def test_example_14_with_header():
    I = parse_ideal("vars u,x,y,z,w\n(u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)")
    assert I.vars.names == ("u", "x", "y", "z", "w")
    assert len(I.gens) == 6 and I.single_degree() == 3


def test_explicit_vars_override_header():
    I = parse_ideal("vars a,b\n(a*b)", vars=["b", "a", "c"])
    assert I.gens == ((1, 1, 0),) and I.vars.names == ("b", "a", "c")


def test_whitespace_and_repeated_factors():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        I = parse_ideal("  ( x1 * x1 ^2 ,\n x2 )  ")
    assert I.gens == ((0, 1), (3, 0))


def test_implicit_names_need_a_header():
    with pytest.raises(ParseError):
        parse_ideal("(u*v)")


def test_unit_monomial():
    I = parse_ideal("vars x,y\n(1, x)")
    assert I.is_unit()


@pytest.mark.parametrize("text, line, col, expected", [
    ("()", 1, 2, "monomial"),
    ("vars x,y\n(x, z)", 2, 5, "one of x,y"),
    ("vars x,y\n(x^0)", 2, 4, "positive exponent"),
    ("vars x,y\n(x y)", 2, 4, "',' or ')'"),
    ("vars x,y\n(x,)", 2, 4, "variable name"),
    ("vars x,y\n(x", 2, 3, "',' or ')'"),
    ("vars x,y\n(x) junk", 2, 5, "end of input"),
])
def test_parse_errors_carry_position(text, line, col, expected):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    err = info.value
    assert (err.line, err.col) == (line, col)
    assert expected in (err.expected or "")


def test_bad_character():
    with pytest.raises(ParseError) as info:
        parse_ideal("vars x\n(x + 1)")
    assert info.value.line == 2


def test_duplicate_header_name():
    with pytest.raises(ParseError):
        parse_ideal("vars x,x\n(x)")


def test_parse_variables():
    assert parse_variables("a, b,c") == VariableSet(("a", "b", "c"))


def test_polarized_names_parse():
    I = parse_ideal("vars x1#1,x1#2\n(x1#1*x1#2)")
    assert I == MonomialIdeal(I.vars, [(1, 1)])
