import itertools

import pytest
from hypothesis import given

from oracles import in_ideal, lcm_box
from polymat import (MonomialIdeal, MonomialPrime, intersection, localization_via_components, localize_kill,
                     monomial_localization, parse_ideal, primary_decomposition)
from polymat.localize import single_variable_localization_degree
from test_ideal import EX_14, EXAM_C2, ideals


def prime(I, names):
    return MonomialPrime(I.vars, I.vars.indices(names))


def test_example_14_kill_x():
    I = parse_ideal(EX_14)
    L = monomial_localization(I, prime(I, "uyzw"))
    assert L == parse_ideal("(u*y, u*w, y*z, w*z)", vars=I.vars)
    # only (y,w) and (z,u) avoid x
    assert L == intersection(prime(I, "yw").ideal(), prime(I, "zu").ideal())


def test_exam_c2_kill_x3():
    I = parse_ideal(EXAM_C2)
    L = localize_kill(I, [2])
    assert L == parse_ideal("(x1^2, x1*x2)", vars=I.vars)
    assert L == intersection(prime(I, ["x1"]).ideal(), prime(I, ["x1", "x2"]).power(2))
    D = primary_decomposition(I)
    assert localization_via_components(D, prime(I, ["x1", "x2"])) == L


def test_trivial_localizations():
    I = parse_ideal(EXAM_C2)
    assert monomial_localization(I, MonomialPrime.maximal(I.vars)) == I
    assert localization_via_components(primary_decomposition(I), MonomialPrime.maximal(I.vars)) == I
    assert localize_kill(I, range(3)).is_unit()


def test_prime_from_other_ring_rejected():
    I = parse_ideal(EXAM_C2)
    J = parse_ideal(EX_14)
    with pytest.raises(ValueError):
        monomial_localization(I, MonomialPrime.maximal(J.vars))


@given(ideals(max_exp=3, max_gens=4))
def test_localization_agrees_with_components(I):
    if not I.is_proper_nonzero():
        return
    D = primary_decomposition(I)
    for k in range(I.n + 1):
        for killed in itertools.combinations(range(I.n), k):
            p = MonomialPrime.killing(I.vars, killed)
            L = monomial_localization(I, p)
            assert localization_via_components(D, p) == L
            # brute force: m is in I(p) iff m times some power of the killed variables is in I
            big = max(I.max_degree(), 1)
            for m in lcm_box([I.gens], I.n):
                lifted = tuple(big if i in killed else e for i, e in enumerate(m))
                assert (m in L) == in_ideal(lifted, I.gens)


def test_single_variable_formula():
    I = parse_ideal(EXAM_C2)
    # a = 3 for x1: only x1^3 has full x1-degree, so I(p_{1}) is the unit ideal
    assert single_variable_localization_degree(I, 0) == (0, [(0, 0, 0)])
    assert single_variable_localization_degree(I, 2) == (2, [(2, 0, 0), (1, 1, 0)])


def test_single_variable_formula_mixed_degrees():
    # killing x1 in (x1*x2, x3^2) leaves (x2, x3^2)
    I = MonomialIdeal(parse_ideal(EXAM_C2).vars, [(1, 1, 0), (0, 0, 2)])
    assert single_variable_localization_degree(I, 0) == (None, [(0, 1, 0), (0, 0, 2)])
