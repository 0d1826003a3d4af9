"""Irreducible and primary decomposition of monomial ideals.

Irreducible components are found by the splitting rule

    I = (I + x_i^a) ∩ (I + u / x_i^a)     for u = x_i^a * u' in G(I), u' != 1,

applied until every generator is a pure power.  Associated primes are the
radicals of the irredundant irreducible components; grouping components by
radical gives an irredundant primary decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import NotPolymatroidalError, PresentationError
from .ideal import MonomialIdeal, VariableSet, _minimal, intersection, monomials_of_degree


@dataclass(frozen=True)
class MonomialPrime:
    vars: VariableSet
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if any(not 0 <= i < self.vars.n for i in self.members):
            raise ValueError(f"prime members {sorted(self.members)} out of range")

    @classmethod
    def maximal(cls, vars: VariableSet) -> MonomialPrime:
        return cls(vars, frozenset(range(vars.n)))

    @classmethod
    def killing(cls, vars: VariableSet, killed) -> MonomialPrime:
        """The prime generated by every variable not in ``killed``."""
        return cls(vars, frozenset(range(vars.n)) - frozenset(killed))

    @property
    def height(self) -> int:
        return len(self.members)

    @property
    def killed(self) -> frozenset[int]:
        return frozenset(range(self.vars.n)) - self.members

    def is_maximal(self) -> bool:
        return len(self.members) == self.vars.n

    def ideal(self) -> MonomialIdeal:
        n = self.vars.n
        return MonomialIdeal._trusted(
            self.vars, tuple(tuple(1 if j == i else 0 for j in range(n)) for i in sorted(self.members)))

    def power(self, a: int) -> MonomialIdeal:
        if a == 0:
            return MonomialIdeal.unit(self.vars)
        return MonomialIdeal.from_single_degree(self.vars, monomials_of_degree(self.vars.n, a, self.members))

    def __add__(self, other: MonomialPrime) -> MonomialPrime:
        return MonomialPrime(self.vars, self.members | other.members)

    def __le__(self, other: MonomialPrime) -> bool:
        return self.members <= other.members

    def __lt__(self, other: MonomialPrime) -> bool:
        return self.members < other.members

    def sort_key(self):
        return (len(self.members), sorted(self.members))

    def names(self) -> list[str]:
        return [self.vars.names[i] for i in sorted(self.members)]

    def __str__(self):
        return "(" + ",".join(self.names()) + ")"

    def __repr__(self):
        return f"MonomialPrime{self}"


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal (x_i^{e_i} : i in entries), stored as a length-n exponent vector (0 = absent)."""

    vars: VariableSet
    exponents: tuple[int, ...]

    @property
    def entries(self) -> dict[int, int]:
        return {i: e for i, e in enumerate(self.exponents) if e}

    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.vars, frozenset(i for i, e in enumerate(self.exponents) if e))

    def ideal(self) -> MonomialIdeal:
        n = self.vars.n
        gens = tuple(tuple(e if j == i else 0 for j in range(n)) for i, e in enumerate(self.exponents) if e)
        return MonomialIdeal(self.vars, gens)

    def __str__(self):
        parts = []
        for name, e in zip(self.vars.names, self.exponents):
            if e:
                parts.append(name if e == 1 else f"{name}^{e}")
        return "(" + ",".join(parts) + ")"


@dataclass(frozen=True)
class PrimePower:
    prime: MonomialPrime
    exponent: int

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError("prime power exponent must be positive")

    def ideal(self) -> MonomialIdeal:
        return self.prime.power(self.exponent)

    def __str__(self):
        return f"{self.prime}^{self.exponent}" if self.exponent > 1 else str(self.prime)


@dataclass
class Decomposition:
    """An irredundant primary decomposition; components[i] is primes[i]-primary."""

    ideal: MonomialIdeal
    components: list[MonomialIdeal]
    primes: list[MonomialPrime]
    minimal: list[bool] = field(default_factory=list)

    def check(self) -> bool:
        return intersection(*self.components) == self.ideal

    def to_json(self) -> dict:
        out = []
        for Q, p, is_min in zip(self.components, self.primes, self.minimal):
            item = {"prime": p.names(), "minimal": is_min, "generators": [Q.monomial_str(g) for g in Q.gens]}
            a = prime_power_exponent(Q, p)
            if a is not None:
                item["exponent"] = a
            out.append(item)
        return {"ideal": str(self.ideal), "components": out}


# -- irreducible decomposition -------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _split(gens: tuple[tuple[int, ...], ...]) -> frozenset[tuple[int, ...]]:
    for u in gens:
        nz = [i for i, e in enumerate(u) if e]
        if len(nz) > 1:
            i = nz[0]
            head = tuple(e if j == i else 0 for j, e in enumerate(u))
            tail = tuple(0 if j == i else e for j, e in enumerate(u))
            return _split(_minimal(gens + (head,))) | _split(_minimal(gens + (tail,)))
    exps = [0] * len(gens[0])
    for u in gens:
        for i, e in enumerate(u):
            if e:
                exps[i] = e
    return frozenset([tuple(exps)])


def _irreducible_contains(big: tuple[int, ...], small: tuple[int, ...]) -> bool:
    """True when the irreducible ideal ``small`` is contained in ``big``."""
    return all(f == 0 or (e != 0 and e <= f) for e, f in zip(big, small))


def _irredundant(comps) -> list[tuple[int, ...]]:
    # for irreducible monomial ideals redundancy means containing another component
    comps = list(comps)
    return [c for c in comps
            if not any(d != c and _irreducible_contains(c, d) for d in comps)]


def _irreducible_key(e: tuple[int, ...]):
    return (sum(1 for x in e if x), tuple(0 if x == 0 else 1 for x in e)[::-1], e)


def irreducible_decomposition(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """Irredundant irreducible components of I in a deterministic order."""
    I.require_proper("irreducible_decomposition")
    comps = sorted(_irredundant(_split(I.gens)), key=_irreducible_key)
    return [IrreducibleComponent(I.vars, c) for c in comps]


def associated_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    I.require_proper("associated_primes")
    members = {frozenset(i for i, e in enumerate(c) if e) for c in _irredundant(_split(I.gens))}
    return sorted((MonomialPrime(I.vars, m) for m in members), key=MonomialPrime.sort_key)


def minimal_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    ass = associated_primes(I)
    return [p for p in ass if not any(q < p for q in ass)]


def height(I: MonomialIdeal) -> int:
    return min(p.height for p in minimal_primes(I))


def is_unmixed(I: MonomialIdeal) -> bool:
    return len({p.height for p in associated_primes(I)}) == 1


def is_equidimensional(I: MonomialIdeal) -> bool:
    return len({p.height for p in minimal_primes(I)}) == 1


def primary_decomposition(I: MonomialIdeal) -> Decomposition:
    comps = irreducible_decomposition(I)
    groups: dict[frozenset[int], list[MonomialIdeal]] = {}
    for c in comps:
        groups.setdefault(c.radical().members, []).append(c.ideal())
    primes = sorted((MonomialPrime(I.vars, m) for m in groups), key=MonomialPrime.sort_key)
    components = [intersection(*groups[p.members]) for p in primes]
    minimal = [not any(q < p for q in primes) for p in primes]
    return Decomposition(I, components, primes, minimal)


def prime_power_exponent(Q: MonomialIdeal, p: MonomialPrime) -> int | None:
    """a when Q = p^a, else None."""
    if Q.is_zero() or Q.is_unit():
        return None
    d = Q.single_degree()
    if d is None or not Q.support() <= p.members:
        return None
    return d if Q == p.power(d) else None


# -- prime-power presentations -------------------------------------------------

def prime_power_presentation(I: MonomialIdeal, bound: int | None = None) -> list[PrimePower] | None:
    """Write I as an intersection of powers of its associated primes, if possible.

    Primes are handled by increasing height.  For each associated prime p the
    exponent is the least a in [1, bound] with

        I(p) = p^a ∩ (chosen powers of the associated primes strictly inside p),

    where I(p) is the monomial localization.  Returns None when some prime has
    no such exponent, i.e. when I has no presentation by prime powers.
    """
    from .localize import monomial_localization

    I.require_proper("prime_power_presentation")
    if bound is None:
        bound = I.max_degree()
    ass = associated_primes(I)
    chosen: dict[frozenset[int], PrimePower] = {}
    for p in ass:
        target = monomial_localization(I, p)
        below = [chosen[q.members].ideal() for q in ass if q < p]
        for a in range(1, bound + 1):
            candidate = p.power(a)
            if below:
                candidate = intersection(candidate, *below)
            if candidate == target:
                chosen[p.members] = PrimePower(p, a)
                break
        else:
            return None
    result = [chosen[p.members] for p in ass]
    if intersection(*(pp.ideal() for pp in result)) != I:
        return None
    return result


def hv_presentation(I: MonomialIdeal) -> tuple[list[PrimePower], int]:
    """Return (powers of the non-maximal associated primes, s) with I = ∩ p_i^{a_i} ∩ m^s.

    Only defined for polymatroidal ideals; s = 0 means m is not associated.
    """
    from .polymatroid import is_polymatroidal

    verdict = is_polymatroidal(I)
    if not verdict:
        raise NotPolymatroidalError(f"{I} is not polymatroidal (witness {verdict.witness})")
    d = I.single_degree()
    pres = prime_power_presentation(I, bound=d)
    if pres is None:
        raise PresentationError(f"no prime-power presentation of {I} with exponents <= {d}")
    s = 0
    rest = []
    for pp in pres:
        if pp.prime.is_maximal():
            s = pp.exponent
        else:
            rest.append(pp)
    return rest, s


def pairwise_sums_maximal(primes: list[MonomialPrime]) -> bool:
    return all((p + q).is_maximal() for p, q in combinations(primes, 2))
