"""Worked examples with their known decompositions and verdicts.

``check_fixtures`` recomputes everything from scratch and lists every
discrepancy, so an empty problem list means the example reproduces exactly.
"""

from __future__ import annotations

from . import cm, codim1, decompose as dec
from .ideal import MonomialIdeal, VariableSet, intersection
from .parse import parse_ideal
from .polymatroid import is_matroidal, is_polymatroidal


def _pp(vars: VariableSet, names: str, a: int = 1) -> MonomialIdeal:
    return dec.MonomialPrime(vars, vars.indices(names.split(","))).power(a)


def _exam_c2():
    I = parse_ideal("vars x1,x2,x3\n(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)")
    v = I.vars
    problems = []
    if I != intersection(_pp(v, "x1"), _pp(v, "x1,x2", 2), _pp(v, "x1,x2,x3", 3)):
        problems.append("decomposition (x1) ∩ (x1,x2)^2 ∩ (x1,x2,x3)^3 fails")
    rest, s = dec.hv_presentation(I)
    if [(str(pp.prime), pp.exponent) for pp in rest] != [("(x1)", 1), ("(x1,x2)", 2)] or s != 3:
        problems.append(f"prime-power presentation is {[str(pp) for pp in rest]}, s={s}")
    if not is_polymatroidal(I):
        problems.append("not polymatroidal")
    if not codim1.is_connected_codim_one(I):
        problems.append("not connected in codimension one")
    if dec.is_unmixed(I):
        problems.append("unexpectedly unmixed")
    g = cm.is_generalized_cm(I)
    if g:
        problems.append("unexpectedly generalized CM")
    # the localization killing x3 is (x1) ∩ (x1,x2)^2 and is not CM
    bad = {str(p): L for p, L in cm.failing_localizations(I)}
    if bad.get("(x1,x2)") != intersection(_pp(v, "x1"), _pp(v, "x1,x2", 2)):
        problems.append("I(p_{3}) is not the non-CM ideal (x1) ∩ (x1,x2)^2")
    return I, problems


def _example_14():
    I = parse_ideal("vars u,x,y,z,w\n(u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)")
    v = I.vars
    problems = []
    expected = {frozenset(v.indices(s.split(","))) for s in ("x,u", "x,z", "y,w", "z,u")}
    if {p.members for p in dec.associated_primes(I)} != expected:
        problems.append(f"Ass = {[str(p) for p in dec.associated_primes(I)]}")
    if I != intersection(*(dec.MonomialPrime(v, p).ideal() for p in expected)):
        problems.append("not the intersection of its four primes")
    if not dec.is_unmixed(I):
        problems.append("not unmixed")
    if not is_matroidal(I):
        problems.append("not matroidal")
    if cm.is_generalized_cm(I):
        problems.append("unexpectedly generalized CM")
    witness = parse_ideal("(u*y, u*w, y*z, w*z)", vars=v)
    if witness not in [L for _, L in cm.failing_localizations(I)]:
        problems.append("(uy,uw,yz,wz) is not among the non-CM localizations")
    return I, problems


def _clauses(text: str, expected: set[str], presentation=None):
    I = parse_ideal(text)
    problems = []
    if presentation is not None and I != presentation(I.vars):
        problems.append("stated decomposition fails")
    J, s = cm.canonical_split(I)
    r = cm.theorem_th_classify(J, s)
    if set(r.clauses) != expected:
        problems.append(f"clauses {sorted(r.clauses)} != {sorted(expected)}")
    if not r.gcm_polymatroidal:
        problems.append("not a generalized CM polymatroidal ideal")
    return I, problems


def _exam1_i():
    return _clauses("vars x1,x2\n(x1*x2^3, x1^2*x2^2)", {"a", "b"},
                    lambda v: intersection(_pp(v, "x1"), _pp(v, "x2", 2), _pp(v, "x1,x2", 4)))


def _exam1_ii():
    return _clauses("vars x1,x2,x3\n(x1^2*x2, x1*x2^2, x1*x2*x3)", {"a", "c"},
                    lambda v: intersection(_pp(v, "x1"), _pp(v, "x2"), _pp(v, "x1,x2,x3", 3)))


EXAM1_III = intersection(*(_pp(VariableSet.standard(6), s)
                           for s in ("x1,x2,x3,x4", "x3,x4,x5,x6", "x1,x2,x5,x6")))


def _exam1_iii():
    I, problems = _clauses(EXAM1_III.to_text(), {"b", "c"})
    if not is_matroidal(I):
        problems.append("not matroidal")
    return I, problems


def _exam2():
    v = VariableSet.standard(3)
    I = intersection(_pp(v, "x1,x2"), _pp(v, "x2,x3", 2), _pp(v, "x1,x2,x3", 3))
    problems = []
    if not is_polymatroidal(I):
        problems.append("not polymatroidal")
    if not cm.is_generalized_cm(I):
        problems.append("not generalized CM")
    if not codim1.is_connected_codim_one(I):
        problems.append("not connected in codimension one")
    J, s = cm.canonical_split(I)
    if J.single_degree() is not None:
        problems.append("J is generated in a single degree")
    if "b" not in cm.theorem_th_classify(J, s).clauses:
        problems.append("clause (b) fails")
    return I, problems


def _post_poly2():
    I = parse_ideal("vars x1,x2,x3\n(x1^2, x1*x2, x1*x3, x2*x3)")
    problems = []
    if not dec.is_equidimensional(I):
        problems.append("not equidimensional")
    if dec.is_unmixed(I):
        problems.append("unexpectedly unmixed")
    return I, problems


FIXTURES = {
    "exam-c2": _exam_c2,
    "example-1.4": _example_14,
    "exam1-i": _exam1_i,
    "exam1-ii": _exam1_ii,
    "exam1-iii": _exam1_iii,
    "exam2": _exam2,
    "post-poly2": _post_poly2,
}


def check_fixtures():
    """Yield (name, ideal, problems) for each worked example."""
    for name, build in FIXTURES.items():
        I, problems = build()
        yield name, I, problems
