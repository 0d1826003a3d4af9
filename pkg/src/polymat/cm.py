"""Cohen-Macaulay and generalized Cohen-Macaulay polymatroidal ideals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .decompose import (MonomialPrime, associated_primes, hv_presentation, is_equidimensional,
                        is_unmixed, pairwise_sums_maximal, prime_power_presentation)
from .errors import HypothesisError, NotPolymatroidalError
from .ideal import MonomialIdeal, intersection
from .polymatroid import is_matroidal, is_polymatroidal, recognize_cm_shape, veronese
from .verdict import Verdict


def _require_polymatroidal(I: MonomialIdeal) -> None:
    v = is_polymatroidal(I)
    if not v:
        raise NotPolymatroidalError(f"{I} is not polymatroidal (witness {v.witness})")


def _cm_shape_or_trivial(I: MonomialIdeal) -> bool:
    return I.is_unit() or recognize_cm_shape(I) is not None


def is_cm_polymatroidal(I: MonomialIdeal) -> bool:
    """A polymatroidal ideal is CM iff it is principal, Veronese or squarefree Veronese."""
    _require_polymatroidal(I)
    return recognize_cm_shape(I) is not None


def _killed_sets(n: int):
    # nonempty killed sets <=> primes p != m; small killed sets first
    for k in range(1, n + 1):
        yield from combinations(range(n), k)


def failing_localizations(I: MonomialIdeal, first_only: bool = False) -> list[tuple[MonomialPrime, MonomialIdeal]]:
    """Monomial primes p != m whose localization I(p) is not CM.

    Each I(p) of a polymatroidal ideal is polymatroidal again, so its CM-ness
    is read off its shape.  Unit localizations count as CM.
    """
    supp = I.support()
    seen: dict[frozenset[int], bool] = {}
    out = []
    for killed in _killed_sets(I.n):
        key = frozenset(killed) & supp
        ok = seen.get(key)
        local = I.substitute_one(key)
        if ok is None:
            ok = seen[key] = _cm_shape_or_trivial(local)
        if not ok:
            out.append((MonomialPrime.killing(I.vars, killed), local))
            if first_only:
                break
    return out


def is_generalized_cm(I: MonomialIdeal) -> Verdict:
    """Equidimensional, and every localization at a monomial prime p != m is CM.

    The witness is the first failing prime (fewest killed variables, then
    variable order) together with its localization.
    """
    _require_polymatroidal(I)
    if not is_equidimensional(I):
        return Verdict(False, reason="not-equidimensional")
    fails = failing_localizations(I, first_only=True)
    if fails:
        p, local = fails[0]
        return Verdict(False, witness={"prime": p, "killed": sorted(p.killed), "localization": local},
                       reason="localization-not-cm")
    return Verdict(True)


# -- the J ∩ m^s classification ------------------------------------------------

@dataclass
class ThReport:
    J: MonomialIdeal
    s: int
    I: MonomialIdeal
    clauses: frozenset[str]
    polymatroidal: bool
    gcm: bool

    @property
    def gcm_polymatroidal(self) -> bool:
        return self.polymatroidal and self.gcm

    @property
    def consistent(self) -> bool:
        """Some clause holds exactly when I is a gCM polymatroidal ideal."""
        return bool(self.clauses) == self.gcm_polymatroidal


def clause_a(J: MonomialIdeal) -> bool:
    return recognize_cm_shape(J) is not None


def clause_b(J: MonomialIdeal) -> bool:
    """J is an equidimensional intersection of prime powers whose primes pairwise sum to m."""
    if not is_equidimensional(J):
        return False
    pres = prime_power_presentation(J)
    return pres is not None and pairwise_sums_maximal([pp.prime for pp in pres])


def clause_c(J: MonomialIdeal) -> bool:
    return J.single_degree() == 2 and is_matroidal(J) and is_unmixed(J)


def theorem_th_classify(J: MonomialIdeal, s: int) -> ThReport:
    """Clauses (a), (b), (c) for J, and whether I = J ∩ m^s is gCM polymatroidal.

    I must be fully supported and generated in a single degree d, with s in {0, d}.
    """
    J.require_proper("theorem_th_classify")
    I = J if s == 0 else J & veronese(J.vars, s)
    if not I.is_fully_supported():
        raise HypothesisError(f"{I} is not fully supported")
    d = I.single_degree()
    if d is None:
        raise HypothesisError(f"{I} is not generated in a single degree")
    if s not in (0, d):
        raise HypothesisError(f"s must be 0 or {d}, got {s}")
    clauses = frozenset(name for name, test in (("a", clause_a), ("b", clause_b), ("c", clause_c)) if test(J))
    poly = bool(is_polymatroidal(I))
    gcm = poly and bool(is_generalized_cm(I))
    return ThReport(J, s, I, clauses, poly, gcm)


def canonical_split(I: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """(J, s) with I = J ∩ m^s read off the prime-power presentation of a polymatroidal I.

    J is the intersection of the non-maximal prime powers when m is associated
    and some other prime is too; otherwise J = I and s = 0.
    """
    rest, s = hv_presentation(I)
    if s and rest:
        return intersection(*(pp.ideal() for pp in rest)), s
    return I, 0


def cap_prod(J: MonomialIdeal, d: int) -> MonomialIdeal:
    """J * m^(d-t) for J generated in degree t <= d; checked against J ∩ m^d."""
    J.require_proper("cap_prod")
    t = J.single_degree()
    if t is None:
        raise HypothesisError(f"{J} is not generated in a single degree")
    if d < t:
        raise HypothesisError(f"need d >= {t}, got {d}")
    prod = J * veronese(J.vars, d - t) if d > t else J
    assert prod == J & veronese(J.vars, d), (J, d)
    return prod


def lemma_akhar_check(I: MonomialIdeal) -> bool:
    """Pairwise sums of associated primes of a fully supported degree-2 ideal.

    Returns whether every two distinct associated primes sum to m.  Asserts
    that polymatroidal implies this, and that the converse holds whenever I
    is an intersection of prime powers.
    """
    I.require_proper("lemma_akhar_check")
    if I.single_degree() != 2:
        raise HypothesisError(f"{I} is not generated in degree 2")
    if not I.is_fully_supported():
        raise HypothesisError(f"{I} is not fully supported")
    sums = pairwise_sums_maximal(associated_primes(I))
    poly = bool(is_polymatroidal(I))
    if poly:
        assert sums, I
    elif sums:
        assert prime_power_presentation(I) is None, I
    return sums
