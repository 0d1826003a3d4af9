"""Theorem-verification suites over exhaustive ideal populations.

Each suite walks a deterministic population, counts how many members pass
each filter, and records every counterexample in the ideal text format so
it can be replayed from the command line.
"""

from __future__ import annotations

import itertools
import logging
import os
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from . import cm, codim1, decompose as dec, localize as loc, polymatroid as pm
from .errors import BudgetExceeded
from .ideal import MonomialIdeal, VariableSet, intersection, monomials_of_degree
from .populations import (DEFAULT_BUDGET, enumerate_single_degree_ideals, matroidal_ideals,
                          polymatroidal_population, polymatroidal_subsets, random_ideal,
                          random_single_degree_ideal, veronese_type_ideals)
from .reisner import is_cm_reisner, polarize, stanley_reisner_complex
from .simplicial import strongly_connected

log = logging.getLogger(__name__)

MAX_STORED_COUNTEREXAMPLES = 50


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("POLYMAT_BUDGET")
    return int(raw) if raw else default


class Run:
    def __init__(self, budget: int):
        self.budget = budget
        self.evaluations = 0
        self.population = 0
        self.counts: Counter[str] = Counter()
        self.failures = 0
        self.counterexamples: list[dict] = []

    @property
    def remaining(self) -> int:
        return max(self.budget - self.evaluations, 0)

    def charge(self, k: int = 1) -> None:
        self.evaluations += k
        if self.evaluations > self.budget:
            raise BudgetExceeded(f"work budget of {self.budget} predicate evaluations exhausted")

    def member(self) -> None:
        self.population += 1
        self.charge()

    def count(self, key: str, k: int = 1) -> None:
        self.counts[key] += k
        self.charge()

    def check(self, ok: bool, I: MonomialIdeal, detail: str) -> bool:
        if not ok:
            self.failures += 1
            if len(self.counterexamples) < MAX_STORED_COUNTEREXAMPLES:
                self.counterexamples.append({"ideal": I.to_text(), "detail": detail})
            log.warning("counterexample: %s -- %s", I, detail)
        return ok


@dataclass
class SuiteReport:
    suite: str
    params: dict
    population: int
    counts: dict
    elapsed: float
    evaluations: int
    failures: int
    counterexamples: list = field(default_factory=list)
    budget_exceeded: bool = False

    @property
    def clean(self) -> bool:
        return self.failures == 0 and not self.budget_exceeded

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "population": self.population,
            "counts": dict(sorted(self.counts.items())),
            "elapsed_seconds": round(self.elapsed, 3),
            "evaluations": self.evaluations,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
            "budget_exceeded": self.budget_exceeded,
        }

    def summary(self) -> str:
        status = "BUDGET" if self.budget_exceeded else ("ok" if self.clean else "FAIL")
        counts = ", ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        return (f"[{status}] {self.suite} {self.params}: population={self.population}, "
                f"counterexamples={self.failures}, {self.elapsed:.1f}s; {counts}")


# -- shared populations ------------------------------------------------------

@lru_cache(maxsize=8)
def _polymatroidal(n: int, d: int) -> tuple[MonomialIdeal, ...]:
    return tuple(polymatroidal_population(n, d, exp_max=d))


@lru_cache(maxsize=8)
def _matroidal(n: int, degrees: tuple[int, ...]) -> tuple[MonomialIdeal, ...]:
    out = []
    for nn in range(1, n + 1):
        for dd in degrees:
            if dd <= nn:
                out.extend(matroidal_ideals(nn, dd))
    return tuple(out)


def _polarized_size(I: MonomialIdeal) -> int:
    return sum(max(max(g[i] for g in I.gens), 1) for i in range(I.n))


def _killed_support(I: MonomialIdeal, i: int) -> frozenset[int]:
    return I.substitute_one([i]).support() if not I.substitute_one([i]).is_unit() else frozenset()


# -- suites ------------------------------------------------------------------

def suite_pc(run: Run, n: int = 5, d: int = 4):
    """matroidal and connected in codimension one <=> squarefree Veronese."""
    for nn in range(1, n + 1):
        for dd in range(1, min(d, nn) + 1):
            for I in enumerate_single_degree_ideals(nn, dd, squarefree=True, budget=run.remaining):
                run.member()
                mat = pm.is_matroidal(I)
                c1 = bool(codim1.is_connected_codim_one(I))
                sv = pm.is_squarefree_veronese(I)
                run.count("matroidal", mat)
                run.count("codim1", c1)
                run.count("squarefree-veronese", sv)
                run.check((mat and c1) == sv, I, f"matroidal={mat} codim1={c1} squarefree_veronese={sv}")
                if dec.is_unmixed(I):
                    run.count("sr-cross-check")
                    K = stanley_reisner_complex(I)
                    run.check(strongly_connected(K) == c1, I, "strong connectivity of the complex disagrees")


def suite_gc(run: Run, n: int = 4, d: int = 4):
    """unmixed polymatroidal: connected in codimension one <=> CM; CM => connected."""
    for I in _polymatroidal(n, d):
        run.member()
        is_cm = pm.recognize_cm_shape(I) is not None
        c1 = bool(codim1.is_connected_codim_one(I))
        run.count("cm", is_cm)
        if is_cm:
            run.check(c1, I, "CM but not connected in codimension one")
        if dec.is_unmixed(I):
            run.count("unmixed")
            run.count("unmixed-codim1", c1)
            run.check(c1 == is_cm, I, f"unmixed, codim1={c1}, cm={is_cm}")


def suite_poly2(run: Run, n: int = 5, d: int = 2):
    """fully supported unmixed degree-2 polymatroidal => matroidal or m^2."""
    for nn in range(1, n + 1):
        m2 = pm.veronese(VariableSet.standard(nn), 2)
        for I in polymatroidal_subsets(nn, 2):
            run.member()
            if I.is_fully_supported() and dec.is_unmixed(I):
                run.count("fully-supported-unmixed")
                run.check(pm.is_matroidal(I) or I == m2, I, "neither matroidal nor m^2")


def suite_xjd(run: Run, n: int = 4, d: int = 4):
    """fully supported unmixed polymatroidal containing some x_j^d equals m^d."""
    for I in _polymatroidal(n, d):
        run.member()
        dd = I.single_degree()
        if not I.is_fully_supported() or not dec.is_unmixed(I):
            continue
        run.count("fully-supported-unmixed")
        if any(sum(1 for e in g if e) == 1 for g in I.gens):
            run.count("contains-pure-power")
            run.check(I == pm.veronese(I.vars, dd), I, "contains x_j^d but is not m^d")


def suite_veronese_type(run: Run, n: int = 4, d: int = 4):
    """Veronese type: polymatroidal, and unmixed <=> Min = Ass <=> CM."""
    for nn in range(1, n + 1):
        for I in veronese_type_ideals(nn, d):
            run.member()
            run.check(bool(pm.is_polymatroidal(I)), I, "Veronese-type ideal not polymatroidal")
            unmixed = dec.is_unmixed(I)
            min_is_ass = dec.minimal_primes(I) == dec.associated_primes(I)
            is_cm = pm.recognize_cm_shape(I) is not None
            run.count("unmixed", unmixed)
            run.check(unmixed == min_is_ass == is_cm, I, f"unmixed={unmixed} min=ass={min_is_ass} cm={is_cm}")


def suite_d2_support(run: Run, n: int = 4, d: int = 4):
    """unmixed fully supported connected polymatroidal: supp I(p_{i}) is empty or all but x_i."""
    for I in _polymatroidal(n, d):
        run.member()
        if not (I.is_fully_supported() and dec.is_unmixed(I) and codim1.is_connected_codim_one(I)):
            continue
        run.count("hypothesis")
        everything = frozenset(range(I.n))
        for i in range(I.n):
            supp = _killed_support(I, i)
            run.check(supp in (frozenset(), everything - {i}), I, f"supp I(p_{{{i + 1}}}) = {sorted(supp)}")


def suite_lemma_h(run: Run, n: int = 4, d: int = 4):
    """unmixed fully supported non-squarefree polymatroidal with height > 1 has height != n - 1."""
    for I in _polymatroidal(n, d):
        run.member()
        if I.is_fully_supported() and not I.is_squarefree() and dec.is_unmixed(I):
            h = dec.height(I)
            if h > 1:
                run.count("hypothesis")
                run.check(h != I.n - 1, I, f"height {h} = n - 1")


def suite_lemma_loc(run: Run, n: int = 5, d: int = 4):
    """conditions (a), (b), (c) agree for matroidal I and admissible T."""
    for I in _matroidal(n, tuple(range(1, d + 1))):
        run.member()
        supp = sorted(I.support())
        for t in range(1, len(supp) + 1):
            for T in itertools.combinations(supp, t):
                if not codim1.lemma_loc_hypothesis(I, T):
                    continue
                run.count("instances")
                r = codim1.lemma_loc_equivalence(I, T)
                run.check(r.agree, I, f"T={[I.vars.names[i] for i in T]}: a={r.a} b={r.b} c={r.c}")


def suite_prop2(run: Run, n: int = 5, d: int = 2):
    """degree-2 polymatroidal: equidimensional <=> generalized CM, in the ring of supp(I).

    Killing a variable outside the support leaves I unchanged, so an
    equidimensional non-CM ideal is never gCM in a larger ring; those cases
    are only counted.
    """
    for nn in range(1, n + 1):
        for I in polymatroidal_subsets(nn, 2):
            run.member()
            R = I.on_support()
            eq = dec.is_equidimensional(R)
            g = bool(cm.is_generalized_cm(R))
            run.count("equidimensional", eq)
            run.check(eq == g, I, f"equidimensional={eq} gcm={g}")
            if not I.is_fully_supported():
                run.count("ambient-gcm-differs", bool(cm.is_generalized_cm(I)) != g)


def suite_mat1(run: Run, n: int = 6, d: int = 4):
    """fully supported gCM matroidal of degree > 2: supp I(p_{i}) = all but x_i."""
    for I in _matroidal(n, tuple(range(3, d + 1))):
        run.member()
        if I.is_fully_supported() and cm.is_generalized_cm(I):
            run.count("hypothesis")
            everything = frozenset(range(I.n))
            for i in range(I.n):
                supp = _killed_support(I, i)
                run.check(supp == everything - {i}, I, f"supp I(p_{{{i + 1}}}) = {sorted(supp)}")


def suite_thm_mat(run: Run, n: int = 6, d: int = 4):
    """matroidal of degree > 2: generalized CM <=> CM."""
    for I in _matroidal(n, tuple(range(3, d + 1))):
        run.member()
        g = bool(cm.is_generalized_cm(I))
        c = cm.is_cm_polymatroidal(I)
        run.count("gcm", g)
        run.check(g == c, I, f"gcm={g} cm={c}")
        if c:
            run.check(g, I, "CM but not generalized CM")


def suite_exc(run: Run, n: int = 4, d: int = 4):
    """I = J ∩ m^d polymatroidal, J squarefree with generators of degree >= 2 => J matroidal."""
    for I in _polymatroidal(n, d):
        run.member()
        J, _ = cm.canonical_split(I)
        dd = I.single_degree()
        if not J.is_squarefree() or min(sum(g) for g in J.gens) < 2:
            continue
        if J & pm.veronese(I.vars, dd) != I:
            continue
        run.count("hypothesis")
        run.check(pm.is_matroidal(J), I, f"J = {J} is not matroidal")


def suite_cap_prod(run: Run, n: int = 4, d: int = 3, cases: int = 1000, seed: int = 0):
    """J generated in degree t <= d: J * m^(d-t) = J ∩ m^d."""
    rng = random.Random(seed)
    for _ in range(cases):
        nn = rng.randint(1, n)
        t = rng.randint(1, d)
        J = random_single_degree_ideal(rng, nn, t, 8)
        dd = rng.randint(t, t + 2)
        run.member()
        prod = J * pm.veronese(J.vars, dd - t)
        run.check(prod == J & pm.veronese(J.vars, dd), J, f"d={dd}: J*m^(d-t) != J ∩ m^d")


def _th_reverse_population(n: int, d: int, exp_max: int = 3):
    for nn in range(2, n + 1):
        vars = VariableSet.standard(nn)
        primes = [dec.MonomialPrime(vars, frozenset(c)) for k in range(1, nn) for c in itertools.combinations(range(nn), k)]
        max_k = 3 if nn <= 3 else 2
        seen = set()
        for k in range(1, max_k + 1):
            for ps in itertools.combinations(primes, k):
                for exps in itertools.product(range(1, exp_max + 1), repeat=k):
                    J = intersection(*(p.power(a) for p, a in zip(ps, exps)))
                    if J.gens in seen:
                        continue
                    seen.add(J.gens)
                    if J.single_degree() is not None:
                        yield J, 0
                    for s in range(J.max_degree(), d + 1):
                        yield J, s


def suite_thm_th(run: Run, n: int = 4, d: int = 4):
    """I = J ∩ m^s: some clause (a), (b), (c) holds <=> I is gCM polymatroidal."""
    for I in _polymatroidal(n, d):
        if not I.is_fully_supported():
            continue
        run.member()
        J, s = cm.canonical_split(I)
        r = cm.theorem_th_classify(J, s)
        run.count("forward")
        run.count("forward-gcm", r.gcm_polymatroidal)
        run.check(r.I == I and r.consistent, I,
                  f"J={J} s={s}: clauses={sorted(r.clauses)} gcm_polymatroidal={r.gcm_polymatroidal}")
    for J, s in _th_reverse_population(min(n, 4), d):
        I = J if s == 0 else J & pm.veronese(J.vars, s)
        if not I.is_fully_supported() or I.single_degree() is None:
            continue
        run.member()
        r = cm.theorem_th_classify(J, s)
        run.count("reverse")
        run.count("reverse-clause", bool(r.clauses))
        run.check(r.consistent, I,
                  f"J={J} s={s}: clauses={sorted(r.clauses)} polymatroidal={r.polymatroidal} gcm={r.gcm}")


def suite_akhar(run: Run, n: int = 4, d: int = 2):
    """fully supported degree-2 prime-power intersections: polymatroidal <=> Ass pairwise sums are m."""
    for nn in range(1, n + 1):
        for I in enumerate_single_degree_ideals(nn, 2, budget=run.remaining):
            if not I.is_fully_supported():
                continue
            run.member()
            poly = bool(pm.is_polymatroidal(I))
            sums = dec.pairwise_sums_maximal(dec.associated_primes(I))
            run.count("polymatroidal", poly)
            if poly:
                run.check(sums, I, "polymatroidal but two associated primes do not sum to m")
            elif sums:
                pres = dec.prime_power_presentation(I)
                run.count("sums-without-prime-powers", pres is None)
                run.check(pres is None, I, "prime-power intersection with pairwise sums m, not polymatroidal")


def suite_oracle(run: Run, n: int = 4, d: int = 4, max_polarized: int = 10):
    """Reisner's criterion on the polarization agrees with the CM shape recognizer."""
    for I in _polymatroidal(n, d):
        if _polarized_size(I) > max_polarized:
            continue
        run.member()
        shape = pm.recognize_cm_shape(I) is not None
        over_q = bool(is_cm_reisner(I, "Q"))
        over_f2 = bool(is_cm_reisner(I, 2))
        run.count("cm", shape)
        run.count("f2-disagreements", over_f2 != over_q)
        if over_f2 != over_q:
            log.error("field dependence observed for %s: Q=%s F2=%s", I, over_q, over_f2)
        run.check(over_q == shape, I, f"Reisner over Q={over_q}, recognizer={shape}")
        run.check(over_f2 == shape, I, f"Reisner over F2={over_f2}, recognizer={shape}")


def suite_remark_q(run: Run, n: int = 4, d: int = 4, cases: int = 1000, seed: int = 0):
    """I(p) equals the intersection of the primary components avoiding the killed variables."""
    rng = random.Random(seed)
    for _ in range(cases):
        I = random_ideal(rng, rng.randint(1, n), d, 6)
        if not I.is_proper_nonzero():
            continue
        run.member()
        D = dec.primary_decomposition(I)
        run.check(D.check(), I, "primary components do not intersect back to I")
        for k in range(1, I.n + 1):
            for members in itertools.combinations(range(I.n), k):
                p = dec.MonomialPrime(I.vars, frozenset(members))
                run.count("localizations")
                run.check(loc.localization_via_components(D, p) == loc.monomial_localization(I, p), I,
                          f"mismatch at {p}")
        if I.single_degree() is not None:
            for i in range(I.n):
                run.count("single-variable")
                loc.single_variable_localization_degree(I, i)


def suite_properties(run: Run, n: int = 4, d: int = 4, cases: int = 5000, seed: int = 0):
    """Core invariants: minimalization, brute-force membership, localization and presentations."""
    rng = random.Random(seed)
    for _ in range(cases):
        nn = rng.randint(1, n)
        I = random_ideal(rng, nn, d, 5)
        J = random_ideal(rng, nn, d, 5, vars=I.vars)
        run.member()
        run.count("minimalize")
        run.check(MonomialIdeal(I.vars, I.gens) == I and MonomialIdeal(I.vars, reversed(I.gens)) == I, I,
                  "minimalize not idempotent / order independent")
        D = max(I.max_degree(), J.max_degree()) + 2
        S, P, X = I + J, I * J, I & J
        run.count("brute-force-membership")
        for deg in range(D + 1):
            for m in monomials_of_degree(nn, deg):
                a, b = m in I, m in J
                ok = (m in S) == (a or b) and (m in X) == (a and b)
                ok = ok and (m in P) == any(
                    all(x >= y for x, y in zip(m, g)) and (tuple(x - y for x, y in zip(m, g)) in J)
                    for g in I.gens)
                if not ok:
                    run.check(False, I, f"membership of {m} disagrees for J={J}")
                    break
    for I in _polymatroidal(min(n, 4), min(d, 4)):
        run.member()
        for k in range(0, I.n + 1):
            for killed in itertools.combinations(range(I.n), k):
                L = I.substitute_one(killed)
                run.count("localization-polymatroidal")
                if not L.is_unit():
                    run.check(bool(pm.is_polymatroidal(L)), I, f"I(p) not polymatroidal, killed={killed}")
        rest, s = dec.hv_presentation(I)
        parts = [pp.ideal() for pp in rest] + ([pm.veronese(I.vars, s)] if s else [])
        run.count("hv-reintersection")
        run.check(intersection(*parts) == I, I, "presentation does not intersect back to I")
        if s:
            run.check(s == I.single_degree(), I, f"s={s} differs from the generating degree")


def suite_fixtures(run: Run, n: int = 0, d: int = 0):
    """The worked examples: decompositions, classifications and verdicts."""
    from .fixtures import check_fixtures

    for name, I, problems in check_fixtures():
        run.member()
        run.count(name)
        run.check(not problems, I, "; ".join(problems))


@dataclass
class Suite:
    name: str
    func: Callable
    defaults: dict

    @property
    def description(self) -> str:
        return (self.func.__doc__ or "").strip().splitlines()[0]


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("fixtures", suite_fixtures, {}),
    Suite("poly2", suite_poly2, {"n": 5}),
    Suite("xjd", suite_xjd, {"n": 4, "d": 4}),
    Suite("veronese-type", suite_veronese_type, {"n": 4, "d": 4}),
    Suite("pc", suite_pc, {"n": 5, "d": 4}),
    Suite("gc", suite_gc, {"n": 4, "d": 4}),
    Suite("d2-support", suite_d2_support, {"n": 4, "d": 4}),
    Suite("lemma-h", suite_lemma_h, {"n": 4, "d": 4}),
    Suite("lemma-loc", suite_lemma_loc, {"n": 5, "d": 4}),
    Suite("prop2", suite_prop2, {"n": 5}),
    Suite("mat1", suite_mat1, {"n": 6, "d": 4}),
    Suite("thm-mat", suite_thm_mat, {"n": 6, "d": 4}),
    Suite("exc", suite_exc, {"n": 4, "d": 4}),
    Suite("cap-prod", suite_cap_prod, {"n": 4, "d": 3}),
    Suite("thm-th", suite_thm_th, {"n": 4, "d": 4}),
    Suite("akhar", suite_akhar, {"n": 4}),
    Suite("oracle-agreement", suite_oracle, {"n": 4, "d": 4}),
    Suite("remark-q", suite_remark_q, {"n": 4, "d": 4}),
    Suite("properties", suite_properties, {"n": 4, "d": 4}),
]}


def run_suite(name: str, n: int | None = None, d: int | None = None, budget: int | None = None,
              **extra) -> SuiteReport:
    """Run one registered suite; unknown names raise KeyError."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    params = dict(suite.defaults)
    if n is not None:
        params["n"] = n
    if d is not None and "d" in params:
        params["d"] = d
    params.update(extra)
    run = Run(budget if budget is not None else budget_from_env())
    start = time.perf_counter()
    exceeded = False
    try:
        suite.func(run, **params)
    except BudgetExceeded as exc:
        log.warning("%s: %s", name, exc)
        exceeded = True
    return SuiteReport(name, params, run.population, dict(run.counts), time.perf_counter() - start,
                       run.evaluations, run.failures, run.counterexamples, exceeded)
