"""Exhaustive desk-scale populations of monomial ideals.

All generators stream their output in a fixed canonical order, so a run can
be resumed from an index cursor and reruns are reproducible.
"""

from __future__ import annotations

import itertools
import random
from math import comb
from typing import Iterator

import numpy as np

from .errors import BudgetExceeded
from .ideal import (MonomialIdeal, VariableSet, monomials_of_degree,
                    squarefree_monomials_of_degree)
from .polymatroid import exchange_witness, veronese_type

DEFAULT_BUDGET = 10**7


def population_size(n: int, d: int, squarefree: bool = False, max_gens: int | None = None) -> int:
    M = comb(n, d) if squarefree else comb(n + d - 1, d)
    top = M if max_gens is None else min(M, max_gens)
    return sum(comb(M, k) for k in range(1, top + 1))


def enumerate_single_degree_ideals(n: int, d: int, squarefree: bool = False, max_gens: int | None = None,
                                   start: int = 0, budget: int | None = DEFAULT_BUDGET
                                   ) -> Iterator[MonomialIdeal]:
    """Every nonempty set of degree-d monomials (at most ``max_gens`` of them) as an ideal.

    Same-degree monomials never divide each other, so each subset is already
    a minimal generating set.  Subsets are produced in order of their bitmask
    over the grlex-sorted monomials; ``start`` skips that many subsets.
    """
    size = population_size(n, d, squarefree, max_gens)
    if budget is not None and size > budget:
        raise BudgetExceeded(f"{size} ideals for n={n}, d={d} exceeds budget {budget}")
    vars = VariableSet.standard(n)
    monos = (squarefree_monomials_of_degree if squarefree else monomials_of_degree)(n, d)
    M = len(monos)
    index = 0
    for mask in range(1, 1 << M):
        if max_gens is not None and bin(mask).count("1") > max_gens:
            continue
        if index >= start:
            gens = tuple(monos[k] for k in range(M) if mask >> k & 1)
            yield MonomialIdeal._trusted(vars, gens)
        index += 1


def polymatroidal_subsets(n: int, d: int, squarefree: bool = False) -> Iterator[MonomialIdeal]:
    """The polymatroidal members of :func:`enumerate_single_degree_ideals`."""
    vars = VariableSet.standard(n)
    monos = (squarefree_monomials_of_degree if squarefree else monomials_of_degree)(n, d)
    M = len(monos)
    for mask in range(1, 1 << M):
        gens = tuple(monos[k] for k in range(M) if mask >> k & 1)
        if len(gens) == 1 or exchange_witness(gens, frozenset(gens).__contains__) is None:
            yield MonomialIdeal._trusted(vars, gens)


def veronese_type_ideals(n: int, d_max: int) -> Iterator[MonomialIdeal]:
    """All I_{d; a} with 1 <= d <= d_max and caps a_i in [0, d]."""
    vars = VariableSet.standard(n)
    seen = set()
    for d in range(1, d_max + 1):
        for caps in itertools.product(range(d + 1), repeat=n):
            if sum(caps) < d:
                continue
            I = veronese_type(vars, d, caps)
            if I.gens not in seen:
                seen.add(I.gens)
                yield I


def prime_power_truncations(n: int, d_max: int, exp_max: int, max_primes: int = 3) -> Iterator[MonomialIdeal]:
    """Degree-D parts of p_1^{a_1} ∩ ... ∩ p_k^{a_k} for non-maximal monomial primes.

    For each choice of at most ``max_primes`` primes, exponents a_i <= exp_max
    and 1 <= D <= d_max this yields the ideal generated by the degree-D
    monomials of the intersection (equal to the intersection ∩ m^D whenever
    that is generated in degree D).  Duplicates are dropped.
    """
    vars = VariableSet.standard(n)
    primes = [frozenset(c) for k in range(1, n) for c in itertools.combinations(range(n), k)]
    if not primes:
        return
    seen = set()
    for D in range(1, d_max + 1):
        monos = monomials_of_degree(n, D)
        E = np.array(monos, dtype=np.int64)
        W = np.stack([E[:, sorted(p)].sum(axis=1) for p in primes], axis=1)
        for k in range(1, max_primes + 1):
            for cols in itertools.combinations(range(len(primes)), k):
                sub = W[:, cols]
                for exps in itertools.product(range(1, min(exp_max, D) + 1), repeat=k):
                    mask = (sub >= np.array(exps)).all(axis=1)
                    if not mask.any():
                        continue
                    key = mask.tobytes()
                    if key in seen:
                        continue
                    seen.add(key)
                    yield MonomialIdeal._trusted(vars, tuple(m for m, keep in zip(monos, mask) if keep))


def is_polymatroidal_fast(I: MonomialIdeal) -> bool:
    gens = I.gens
    return len(gens) == 1 or exchange_witness(gens, frozenset(gens).__contains__) is None


def polymatroidal_population(n_max: int = 4, d_max: int = 4, exp_max: int = 4,
                             raw: tuple[tuple[int, int], ...] | None = None) -> list[MonomialIdeal]:
    """Deduplicated polymatroidal ideals for n <= n_max, d <= d_max.

    Sources: Veronese-type ideals, degree truncations of prime-power
    intersections, raw subset enumeration for the (n, d) pairs in ``raw``
    (default: n = 3 with every d <= d_max, and n = 4 with d <= 3), and
    products of two members whose degrees add up to at most d_max.
    """
    if raw is None:
        raw = tuple((3, d) for d in range(1, d_max + 1)) + tuple((4, d) for d in range(1, min(d_max, 3) + 1))
    found: dict[tuple, MonomialIdeal] = {}

    def add(I):
        key = (I.n, I.gens)
        if key not in found and is_polymatroidal_fast(I):
            found[key] = I

    for n in range(1, n_max + 1):
        for I in veronese_type_ideals(n, d_max):
            add(I)
        for I in prime_power_truncations(n, d_max, exp_max, max_primes=min(4, n)):
            add(I)
    for n, d in raw:
        if n <= n_max and d <= d_max:
            for I in polymatroidal_subsets(n, d):
                found.setdefault((I.n, I.gens), I)
    by_degree: dict[tuple[int, int], list[MonomialIdeal]] = {}
    for I in sorted(found.values(), key=lambda I: (I.n, I.max_degree(), I.gens)):
        by_degree.setdefault((I.n, I.max_degree()), []).append(I)
    for (n, d1), left in list(by_degree.items()):
        for d2 in range(d1, d_max - d1 + 1):
            right = by_degree.get((n, d2), [])
            for i, a in enumerate(left):
                for b in (right[i:] if d2 == d1 else right):
                    add(a * b)
    return sorted(found.values(), key=lambda I: (I.n, I.max_degree(), len(I.gens), I.gens))


def matroidal_ideals(n: int, d: int) -> Iterator[MonomialIdeal]:
    return polymatroidal_subsets(n, d, squarefree=True)


def random_ideal(rng: random.Random, n: int, max_deg: int, max_gens: int, vars: VariableSet | None = None
                 ) -> MonomialIdeal:
    vars = vars or VariableSet.standard(n)
    k = rng.randint(1, max_gens)
    gens = []
    for _ in range(k):
        d = rng.randint(1, max_deg)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        gens.append(tuple(e))
    return MonomialIdeal(vars, gens)


def random_single_degree_ideal(rng: random.Random, n: int, d: int, max_gens: int) -> MonomialIdeal:
    monos = monomials_of_degree(n, d)
    k = rng.randint(1, min(max_gens, len(monos)))
    return MonomialIdeal.from_single_degree(VariableSet.standard(n), rng.sample(monos, k))
