"""Monomial localization I(p): send every variable outside p to 1."""

from __future__ import annotations

from .decompose import Decomposition, MonomialPrime
from .ideal import MonomialIdeal, intersection


def monomial_localization(I: MonomialIdeal, p: MonomialPrime) -> MonomialIdeal:
    """I(p), kept over the full ambient variable set.

    Killing every variable gives the unit ideal; p = m gives I back.
    """
    if p.vars != I.vars:
        raise ValueError("prime and ideal live over different variables")
    return I.substitute_one(p.killed)


def localize_kill(I: MonomialIdeal, killed) -> MonomialIdeal:
    return I.substitute_one(killed)


def localization_via_components(D: Decomposition, p: MonomialPrime) -> MonomialIdeal:
    """Intersect the primary components whose support avoids the killed variables."""
    killed = p.killed
    kept = [Q for Q in D.components if not (Q.support() & killed)]
    if not kept:
        return MonomialIdeal.unit(D.ideal.vars)
    return intersection(*kept)


def single_variable_localization_degree(I: MonomialIdeal, i: int) -> tuple[int | None, list[tuple[int, ...]]]:
    """Degree and generators of I(p_{i}) for single-degree I.

    With a = max deg_{x_i} over G(I), the generators are u / x_i^a for the
    u in G(I) divisible by x_i^a, and the degree is d - a.  The degree is
    None when the localization is not generated in a single degree.
    """
    d = I.single_degree()
    if d is None:
        raise ValueError(f"{I} is not generated in a single degree")
    a = max(g[i] for g in I.gens)
    local = I.substitute_one([i])
    if {sum(g) for g in local.gens} != {d - a}:
        return None, list(local.gens)
    gens = MonomialIdeal.from_single_degree(
        I.vars, (tuple(0 if j == i else e for j, e in enumerate(g)) for g in I.gens if g[i] == a))
    assert gens == local, (I, i)
    return d - a, list(gens.gens)
