"""Polymatroidal and matroidal ideals, Veronese-type constructors and CM shapes."""

from __future__ import annotations

from math import comb
from typing import NamedTuple, Sequence

from .decompose import MonomialPrime
from .ideal import (MonomialIdeal, VariableSet, monomials_of_degree,
                    squarefree_monomials_of_degree)
from .verdict import Verdict


def exchange_witness(gens, member) -> tuple | None:
    """First (u, v, i) violating the exchange property, or None.

    ``gens`` must share one degree; ``member`` decides membership of a
    monomial of that degree.
    """
    n = len(gens[0])
    rng = range(n)
    for u in gens:
        for v in gens:
            if u is v:
                continue
            lower = None
            for i in rng:
                if u[i] <= v[i]:
                    continue
                if lower is None:
                    lower = [j for j in rng if u[j] < v[j]]
                w = list(u)
                w[i] -= 1
                for j in lower:
                    w[j] += 1
                    if member(tuple(w)):
                        break
                    w[j] -= 1
                else:
                    return (u, v, i)
    return None


def _exchange(I: MonomialIdeal, member) -> Verdict:
    I.require_proper("is_polymatroidal")
    if I.single_degree() is None:
        return Verdict(False, reason="not generated in a single degree")
    w = exchange_witness(I.gens, member)
    if w is None:
        return Verdict(True)
    return Verdict(False, witness=w, reason="exchange fails")


def is_polymatroidal(I: MonomialIdeal) -> Verdict:
    """Exchange check in membership form: x_j * (u / x_i) must lie in I.

    On failure the witness is (u, v, i) with deg_{x_i}(u) > deg_{x_i}(v) and
    no admissible j.
    """
    if I.is_proper_nonzero() and len(I.gens) == 1:
        return Verdict(True)
    return _exchange(I, I.__contains__)


def is_polymatroidal_generator_form(I: MonomialIdeal) -> Verdict:
    """Same check, but requiring x_j * (u / x_i) to be a minimal generator."""
    gens = set(I.gens)
    return _exchange(I, gens.__contains__)


def is_matroidal(I: MonomialIdeal) -> bool:
    return I.is_squarefree() and bool(is_polymatroidal(I))


# -- constructors --

def veronese_type(vars: VariableSet, d: int, caps: Sequence[int]) -> MonomialIdeal:
    """I_{d; a_1..a_n}: all degree-d monomials with deg_{x_i} <= caps[i]."""
    if d < 1:
        raise ValueError("degree must be positive")
    if len(caps) != vars.n or any(a < 0 for a in caps):
        raise ValueError(f"need {vars.n} nonnegative caps, got {caps}")
    if sum(caps) < d:
        raise ValueError(f"caps {tuple(caps)} admit no monomial of degree {d}")
    gens = [m for m in monomials_of_degree(vars.n, d, [i for i, a in enumerate(caps) if a])
            if all(e <= a for e, a in zip(m, caps))]
    return MonomialIdeal.from_single_degree(vars, gens)


def veronese(vars: VariableSet, d: int, on=None) -> MonomialIdeal:
    return MonomialIdeal.from_single_degree(vars, monomials_of_degree(vars.n, d, on))


def squarefree_veronese(vars: VariableSet, d: int, on=None) -> MonomialIdeal:
    gens = squarefree_monomials_of_degree(vars.n, d, on)
    if not gens:
        raise ValueError(f"no squarefree monomials of degree {d}")
    return MonomialIdeal.from_single_degree(vars, gens)


# -- Cohen-Macaulay shapes --

class CMShape(NamedTuple):
    kind: str  # "principal" | "veronese" | "squarefree-veronese"
    prime: MonomialPrime
    degree: int

    def __str__(self):
        return f"{self.kind}({self.prime}, {self.degree})"


def is_veronese(I: MonomialIdeal) -> bool:
    d = I.single_degree()
    if d is None:
        return False
    k = len(I.support())
    return len(I.gens) == comb(k + d - 1, d)


def is_squarefree_veronese(I: MonomialIdeal) -> bool:
    d = I.single_degree()
    if d is None or not I.is_squarefree():
        return False
    return len(I.gens) == comb(len(I.support()), d)


def recognize_cm_shape(I: MonomialIdeal) -> CMShape | None:
    """Principal, Veronese or squarefree Veronese on the support of I, else None.

    Since G(I) sits inside the degree-d monomials on supp(I), comparing
    generator counts is the same as comparing generator lists.
    """
    I.require_proper("recognize_cm_shape")
    p = MonomialPrime(I.vars, I.support())
    if len(I.gens) == 1:
        return CMShape("principal", p, sum(I.gens[0]))
    d = I.single_degree()
    if d is None:
        return None
    if is_veronese(I):
        return CMShape("veronese", p, d)
    if is_squarefree_veronese(I):
        return CMShape("squarefree-veronese", p, d)
    return None
