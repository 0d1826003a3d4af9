"""Monomials and monomial ideals in k[x_1, ..., x_n].

Monomials are plain tuples of nonnegative exponents indexed by a fixed
:class:`VariableSet`.  A :class:`MonomialIdeal` stores its minimal generating
set G(I) in graded-lexicographic order, so two ideals over the same variables
are equal exactly when their generator tuples are equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import ImproperIdealError, VariableMismatchError

Monomial = tuple[int, ...]

_EXP_LIMIT = 2**31


@dataclass(frozen=True)
class VariableSet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if any(not isinstance(v, str) or not v for v in names):
            raise ValueError("variable labels must be nonempty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable labels in {names}")

    @classmethod
    def standard(cls, n: int) -> VariableSet:
        """The variables x1, ..., xn."""
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def indices(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(v) for v in names)

    def __str__(self):
        return ",".join(self.names)


# -- monomial helpers -------------------------------------------------------

def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def is_squarefree_monomial(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def monomial_support(m: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e)


def grlex_key(m: Monomial):
    # degree first; within a degree x1 > x2 > ... so x1^2 sorts before x1*x2
    return (sum(m), tuple(-e for e in m))


def monomials_of_degree(n: int, d: int, on: Iterable[int] | None = None) -> list[Monomial]:
    """All degree-d monomials in the variables ``on`` (default: all n), grlex order."""
    idx = sorted(range(n) if on is None else on)
    out = []
    for combo in itertools.combinations_with_replacement(idx, d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grlex_key)
    return out


def squarefree_monomials_of_degree(n: int, d: int, on: Iterable[int] | None = None) -> list[Monomial]:
    idx = sorted(range(n) if on is None else on)
    out = []
    for combo in itertools.combinations(idx, d):
        e = [0] * n
        for i in combo:
            e[i] = 1
        out.append(tuple(e))
    out.sort(key=grlex_key)
    return out


def _check_monomial(m, n: int) -> Monomial:
    m = tuple(m)
    if len(m) != n:
        raise VariableMismatchError(f"monomial {m} has {len(m)} exponents, expected {n}")
    for e in m:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0 or e >= _EXP_LIMIT:
            raise ValueError(f"bad exponent {e!r} in {m}")
    return m


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for m in sorted(set(gens), key=sum):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    kept.sort(key=grlex_key)
    return tuple(kept)


# -- ideals -----------------------------------------------------------------

class MonomialIdeal:
    """A monomial ideal, stored by its minimal generators.

    The zero ideal has no generators; the unit ideal is generated by the
    monomial 1 (the all-zero exponent vector).
    """

    __slots__ = ("vars", "gens", "_hash")

    def __init__(self, vars: VariableSet | Sequence[str], gens: Iterable[Sequence[int]] = ()):
        if not isinstance(vars, VariableSet):
            vars = VariableSet(tuple(vars))
        n = vars.n
        self.vars = vars
        self.gens = _minimal(_check_monomial(g, n) for g in gens)
        self._hash = None

    @classmethod
    def _trusted(cls, vars: VariableSet, gens: tuple[Monomial, ...]) -> MonomialIdeal:
        # gens must already be a grlex-sorted antichain
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.gens = gens
        obj._hash = None
        return obj

    @classmethod
    def from_single_degree(cls, vars: VariableSet, gens: Iterable[Monomial]) -> MonomialIdeal:
        """Build from monomials known to share one degree (always an antichain)."""
        return cls._trusted(vars, tuple(sorted(set(gens), key=grlex_key)))

    @classmethod
    def unit(cls, vars: VariableSet) -> MonomialIdeal:
        return cls._trusted(vars, ((0,) * vars.n,))

    @classmethod
    def zero(cls, vars: VariableSet) -> MonomialIdeal:
        return cls._trusted(vars, ())

    @classmethod
    def maximal(cls, vars: VariableSet) -> MonomialIdeal:
        return cls.from_single_degree(vars, monomials_of_degree(vars.n, 1))

    # -- basic predicates --

    @property
    def n(self) -> int:
        return self.vars.n

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit()

    def require_proper(self, what: str = "operation") -> None:
        if self.is_zero():
            raise ImproperIdealError(f"{what} is undefined for the zero ideal")
        if self.is_unit():
            raise ImproperIdealError(f"{what} is undefined for the unit ideal")

    def support(self) -> frozenset[int]:
        """Indices of variables dividing some minimal generator."""
        return frozenset(i for g in self.gens for i, e in enumerate(g) if e)

    def is_fully_supported(self) -> bool:
        return len(self.support()) == self.n

    def is_squarefree(self) -> bool:
        return all(is_squarefree_monomial(g) for g in self.gens)

    def single_degree(self) -> int | None:
        """The common degree of G(I), or None when the generators differ in degree."""
        self.require_proper("generated_in_single_degree")
        d = sum(self.gens[0])
        return d if all(sum(g) == d for g in self.gens) else None

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def __contains__(self, m) -> bool:
        m = tuple(m)
        return any(divides(g, m) for g in self.gens)

    def contains(self, m: Sequence[int]) -> bool:
        m = _check_monomial(m, self.n)
        return m in self

    def issubset(self, other: MonomialIdeal) -> bool:
        self._same_vars(other)
        return all(g in other for g in self.gens)

    # -- arithmetic --

    def _same_vars(self, other: MonomialIdeal) -> None:
        if self.vars != other.vars:
            raise VariableMismatchError(f"variable sets differ: {self.vars} vs {other.vars}")

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_vars(other)
        return MonomialIdeal._trusted(self.vars, _minimal(self.gens + other.gens))

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_vars(other)
        return MonomialIdeal._trusted(
            self.vars, _minimal(mul(a, b) for a in self.gens for b in other.gens))

    def __pow__(self, k: int) -> MonomialIdeal:
        if k < 0:
            raise ValueError("negative ideal power")
        result = MonomialIdeal.unit(self.vars)
        for _ in range(k):
            result = result * self
        return result

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_vars(other)
        return MonomialIdeal._trusted(
            self.vars, _minimal(lcm(a, b) for a in self.gens for b in other.gens))

    def radical(self) -> MonomialIdeal:
        return MonomialIdeal._trusted(
            self.vars, _minimal(tuple(min(e, 1) for e in g) for g in self.gens))

    def substitute_one(self, killed: Iterable[int]) -> MonomialIdeal:
        """Set the variables in ``killed`` to 1 and re-minimalize."""
        killed = frozenset(killed)
        if not killed:
            return self
        gens = (tuple(0 if i in killed else e for i, e in enumerate(g)) for g in self.gens)
        return MonomialIdeal._trusted(self.vars, _minimal(gens))

    def relabel(self, perm: Sequence[int]) -> MonomialIdeal:
        """Move the exponent of variable i to position perm[i]."""
        n = self.n
        def move(g):
            e = [0] * n
            for i, x in enumerate(g):
                e[perm[i]] = x
            return tuple(e)
        return MonomialIdeal(self.vars, (move(g) for g in self.gens))

    def on_support(self) -> MonomialIdeal:
        """The same generators in the polynomial ring of supp(I) only."""
        keep = sorted(self.support())
        vars = VariableSet(tuple(self.vars.names[i] for i in keep))
        return MonomialIdeal._trusted(vars, tuple(tuple(g[i] for i in keep) for g in self.gens))

    # -- identity and display --

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.vars == other.vars and self.gens == other.gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, self.gens))
        return self._hash

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def monomial_str(self, m: Monomial) -> str:
        return format_monomial(m, self.vars)

    def __str__(self):
        return "(" + ", ".join(format_monomial(g, self.vars) for g in self.gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal[{self.vars}]{self}"

    def to_text(self) -> str:
        """Text with an explicit ``vars`` header; reparses to an equal ideal."""
        return f"vars {self.vars}\n{self}"


def format_monomial(m: Monomial, vars: VariableSet) -> str:
    parts = []
    for name, e in zip(vars.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def minimalize(vars: VariableSet, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its divisibility antichain."""
    return MonomialIdeal(vars, gens)


def intersection(*ideals: MonomialIdeal) -> MonomialIdeal:
    if not ideals:
        raise ValueError("intersection of no ideals")
    return reduce(lambda a, b: a & b, ideals)


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    if not ideals:
        raise ValueError("sum of no ideals")
    return reduce(lambda a, b: a + b, ideals)


def product(*ideals: MonomialIdeal) -> MonomialIdeal:
    if not ideals:
        raise ValueError("product of no ideals")
    return reduce(lambda a, b: a * b, ideals)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    return I ** k


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return I.radical()


def support(I: MonomialIdeal) -> frozenset[int]:
    return I.support()


def membership(I: MonomialIdeal, m: Sequence[int]) -> bool:
    return I.contains(m)


def generated_in_single_degree(I: MonomialIdeal) -> int | None:
    return I.single_degree()
