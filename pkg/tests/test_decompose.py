import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import associated_primes as ass_oracle, in_ideal, lcm_box, members
from polymat import (MonomialIdeal, MonomialPrime, NotPolymatroidalError, VariableSet, associated_primes,
                     height, hv_presentation, intersection, irreducible_decomposition, is_equidimensional,
                     is_unmixed, minimal_primes, pairwise_sums_maximal, parse_ideal, primary_decomposition,
                     prime_power_presentation)
from polymat.decompose import prime_power_exponent
from test_ideal import EX_14, EXAM_C2, ideals

X2, X3 = VariableSet.standard(2), VariableSet.standard(3)
POST_POLY2 = "vars x1,x2,x3\n(x1^2, x1*x2, x1*x3, x2*x3)"


def names(primes):
    return [str(p) for p in primes]


def test_principal_squarefree_splits_into_variables():
    comps = irreducible_decomposition(MonomialIdeal(X2, [(1, 1)]))
    assert [str(c) for c in comps] == ["(x1)", "(x2)"]


def test_post_poly2_components():
    I = parse_ideal(POST_POLY2)
    comps = irreducible_decomposition(I)
    assert [str(c) for c in comps] == ["(x1,x2)", "(x1,x3)", "(x1^2,x2,x3)"]
    assert intersection(*(c.ideal() for c in comps)) == I


def test_square_of_plane_maximal_ideal():
    m2 = MonomialIdeal.maximal(X2) ** 2
    comps = irreducible_decomposition(m2)
    assert {str(c) for c in comps} == {"(x1,x2^2)", "(x1^2,x2)"}
    assert members(m2.gens, 2, 4) == set.intersection(*(members(c.ideal().gens, 2, 4) for c in comps))


@given(ideals(max_exp=3, max_gens=4))
def test_irreducible_decomposition_is_exact_and_irredundant(I):
    if not I.is_proper_nonzero():
        return
    comps = [c.ideal() for c in irreducible_decomposition(I)]
    for m in lcm_box([I.gens] + [c.gens for c in comps], I.n):
        assert in_ideal(m, I.gens) == all(in_ideal(m, c.gens) for c in comps)
    for k in range(len(comps)):
        rest = comps[:k] + comps[k + 1:]
        if rest:
            assert intersection(*rest) != I


@given(ideals(max_exp=3, max_gens=4))
def test_associated_primes_match_colon_oracle(I):
    if not I.is_proper_nonzero():
        return
    assert {p.members for p in associated_primes(I)} == ass_oracle(I.gens, I.n)


def test_example_14_primes():
    I = parse_ideal(EX_14)
    ass = associated_primes(I)
    assert {frozenset(p.names()) for p in ass} == {frozenset(s) for s in ("xu", "xz", "yw", "zu")}
    assert minimal_primes(I) == ass
    assert height(I) == 2 and is_unmixed(I)


def test_exam_c2_primes():
    I = parse_ideal(EXAM_C2)
    assert names(associated_primes(I)) == ["(x1)", "(x1,x2)", "(x1,x2,x3)"]
    assert names(minimal_primes(I)) == ["(x1)"]
    assert height(I) == 1 and is_equidimensional(I) and not is_unmixed(I)


def test_post_poly2_equidimensional_not_unmixed():
    I = parse_ideal(POST_POLY2)
    assert names(minimal_primes(I)) == ["(x1,x2)", "(x1,x3)"]
    assert is_equidimensional(I) and not is_unmixed(I)


def test_power_of_maximal_ideal():
    m3 = MonomialIdeal.maximal(X3) ** 3
    assert names(associated_primes(m3)) == ["(x1,x2,x3)"]


@given(ideals(max_exp=3, max_gens=4))
def test_primary_decomposition_components(I):
    if not I.is_proper_nonzero():
        return
    D = primary_decomposition(I)
    assert D.check()
    for Q, p in zip(D.components, D.primes):
        assert Q.radical() == p.ideal()
        # a monomial ideal is primary iff every variable in a generator occurs as a pure power
        pure = {i for g in Q.gens for i, e in enumerate(g) if e and sum(1 for x in g if x) == 1}
        assert pure == p.members


def test_hv_presentations():
    rest, s = hv_presentation(parse_ideal(EXAM_C2))
    assert [(str(pp.prime), pp.exponent) for pp in rest] == [("(x1)", 1), ("(x1,x2)", 2)] and s == 3
    rest, s = hv_presentation(parse_ideal("vars x1,x2,x3\n(x1^2*x2, x1*x2^2, x1*x2*x3)"))
    assert [(str(pp.prime), pp.exponent) for pp in rest] == [("(x1)", 1), ("(x2)", 1)] and s == 3
    rest, s = hv_presentation(MonomialIdeal.maximal(X3) ** 4)
    assert rest == [] and s == 4


def test_hv_requires_polymatroidal():
    with pytest.raises(NotPolymatroidalError):
        hv_presentation(MonomialIdeal(VariableSet.standard(4), [(1, 1, 0, 0), (0, 0, 1, 1)]))


def _prime_power_intersections(n, k_max=2, a_max=3):
    vars = VariableSet.standard(n)
    primes = [MonomialPrime(vars, frozenset(c)) for k in range(1, n + 1)
              for c in itertools.combinations(range(n), k)]
    for k in range(1, k_max + 1):
        for ps in itertools.combinations(primes, k):
            for exps in itertools.product(range(1, a_max + 1), repeat=k):
                yield intersection(*(p.power(a) for p, a in zip(ps, exps)))


def test_presentation_found_for_every_prime_power_intersection():
    for n in (2, 3):
        for J in _prime_power_intersections(n):
            pres = prime_power_presentation(J)
            assert pres is not None, J
            assert intersection(*(pp.ideal() for pp in pres)) == J


def test_presentation_absent():
    # (x1^2, x2) is (x1,x2)-primary but not a power of (x1,x2)
    assert prime_power_presentation(MonomialIdeal(X2, [(2, 0), (0, 1)])) is None


def test_prime_power_exponent():
    p = MonomialPrime(X3, frozenset({0, 1}))
    assert prime_power_exponent(p.power(3), p) == 3
    assert prime_power_exponent(MonomialIdeal(X3, [(2, 0, 0), (0, 1, 0)]), p) is None


def test_pairwise_sums():
    sv = parse_ideal("vars x1,x2,x3\n(x1*x2, x1*x3, x2*x3)")
    assert pairwise_sums_maximal(associated_primes(sv))
    ci = parse_ideal("vars x1,x2,x3,x4\n(x1*x2, x3*x4)")
    assert not pairwise_sums_maximal(associated_primes(ci))
    assert pairwise_sums_maximal(associated_primes(MonomialIdeal.maximal(X3) ** 2))


def test_decomposition_json():
    doc = primary_decomposition(parse_ideal(EXAM_C2)).to_json()
    assert [c["prime"] for c in doc["components"]] == [["x1"], ["x1", "x2"], ["x1", "x2", "x3"]]
    assert doc["components"][0]["exponent"] == 1
    assert [c["minimal"] for c in doc["components"]] == [True, False, False]
