import pytest

from polymat import (HypothesisError, MonomialIdeal, MonomialPrime, NotPolymatroidalError, VariableSet,
                     canonical_split, cap_prod, failing_localizations, intersection, is_cm_polymatroidal,
                     is_cm_reisner, is_generalized_cm, lemma_akhar_check, parse_ideal, squarefree_veronese,
                     theorem_th_classify, veronese)
from polymat.fixtures import EXAM1_III, check_fixtures
from polymat.populations import polymatroidal_subsets
from test_ideal import EX_14, EXAM_C2

X3 = VariableSet.standard(3)


def pp(vars, members, a=1):
    return MonomialPrime(vars, frozenset(members)).power(a)


@pytest.mark.parametrize("name, I, problems", list(check_fixtures()), ids=lambda x: x if isinstance(x, str) else "")
def test_fixture(name, I, problems):
    assert problems == []


def test_gcm_examples():
    v = is_generalized_cm(parse_ideal(EX_14))
    assert not v and v.witness["killed"] == [0]
    assert not is_generalized_cm(parse_ideal(EXAM_C2))
    exam2 = intersection(pp(X3, {0, 1}), pp(X3, {1, 2}, 2), pp(X3, {0, 1, 2}, 3))
    assert is_generalized_cm(exam2)


def test_example_14_kill_x_localization_fails():
    I = parse_ideal(EX_14)
    bad = {tuple(p.killed): L for p, L in failing_localizations(I)}
    assert bad[(1,)] == parse_ideal("(u*y, u*w, y*z, w*z)", vars=I.vars)


def test_cm_vs_gcm():
    m3 = veronese(VariableSet.standard(4), 3)
    assert is_cm_polymatroidal(m3) and is_generalized_cm(m3)
    assert not is_cm_polymatroidal(EXAM1_III) and is_generalized_cm(EXAM1_III)
    with pytest.raises(NotPolymatroidalError):
        is_generalized_cm(MonomialIdeal(VariableSet.standard(4), [(1, 1, 0, 0), (0, 0, 1, 1)]))


def test_cm_shape_matches_reisner_oracle():
    for I in polymatroidal_subsets(3, 2):
        assert is_cm_polymatroidal(I) == bool(is_cm_reisner(I)), I


def test_theorem_clauses():
    J, s = canonical_split(parse_ideal("vars x1,x2\n(x1*x2^3, x1^2*x2^2)"))
    assert s == 4 and theorem_th_classify(J, s).clauses == {"a", "b"}
    J, s = canonical_split(parse_ideal("vars x1,x2,x3\n(x1^2*x2, x1*x2^2, x1*x2*x3)"))
    assert s == 3 and theorem_th_classify(J, s).clauses == {"a", "c"}
    J, s = canonical_split(EXAM1_III)
    r = theorem_th_classify(J, s)
    assert s == 0 and r.clauses == {"b", "c"} and r.gcm_polymatroidal and r.consistent


def test_theorem_no_clause():
    # (x1*x2, x3*x4): J itself is not polymatroidal and satisfies none of the clauses
    J = MonomialIdeal(VariableSet.standard(4), [(1, 1, 0, 0), (0, 0, 1, 1)])
    r = theorem_th_classify(J, 0)
    assert r.clauses == frozenset() and not r.polymatroidal and r.consistent


def test_theorem_guards():
    J = MonomialIdeal(X3, [(1, 0, 0), (0, 1, 0)])
    with pytest.raises(HypothesisError):
        theorem_th_classify(J, 0)  # not fully supported
    with pytest.raises(HypothesisError):
        theorem_th_classify(MonomialIdeal(X3, [(1, 0, 0), (0, 2, 0), (0, 0, 1)]), 0)
    with pytest.raises(HypothesisError):
        theorem_th_classify(veronese(X3, 2), 1)


def test_cap_prod():
    J = MonomialIdeal(X3, [(1, 0, 0)])
    assert cap_prod(J, 2) == J & veronese(X3, 2) == MonomialIdeal(X3, [(2, 0, 0), (1, 1, 0), (1, 0, 1)])
    sv = squarefree_veronese(X3, 2)
    assert cap_prod(sv, 2) == sv
    with pytest.raises(HypothesisError):
        cap_prod(sv, 1)
    with pytest.raises(HypothesisError):
        cap_prod(MonomialIdeal(X3, [(1, 0, 0), (0, 2, 0)]), 3)


def test_akhar():
    assert lemma_akhar_check(squarefree_veronese(X3, 2))
    assert lemma_akhar_check(veronese(X3, 2))
    assert not lemma_akhar_check(MonomialIdeal(VariableSet.standard(4), [(1, 1, 0, 0), (0, 0, 1, 1)]))
    with pytest.raises(HypothesisError):
        lemma_akhar_check(veronese(X3, 3))
    with pytest.raises(HypothesisError):
        lemma_akhar_check(MonomialIdeal(X3, [(1, 1, 0)]))


def test_gcm_needs_equidimensional():
    # (x1^2, x1*x2, x1*x3, x2*x3) is (x1,x2) ∩ (x1,x3) ∩ (x1^2,x2,x3); equidimensional
    I = parse_ideal("vars x1,x2,x3\n(x1^2, x1*x2, x1*x3, x2*x3)")
    assert is_generalized_cm(I)
    # (x1) ∩ (x1,x2)^2 in two variables has minimal prime (x1) only, yet is not CM
    K = MonomialIdeal(VariableSet.standard(2), [(2, 0), (1, 1)])
    assert not is_cm_polymatroidal(K) and is_generalized_cm(K)
