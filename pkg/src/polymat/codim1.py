"""Connectedness in codimension one."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .decompose import MonomialPrime, associated_primes, is_equidimensional, minimal_primes
from .errors import HypothesisError
from .ideal import MonomialIdeal
from .localize import localize_kill
from .polymatroid import is_matroidal
from .simplicial import SimplicialComplex, strongly_connected  # noqa: F401  (re-exported)
from .verdict import Verdict


@dataclass
class MinPrimeGraph:
    """Minimal primes of an equidimensional ideal; p ~ q when p + q has h + 1 generators."""

    nodes: list[MonomialPrime]
    edges: list[tuple[int, int]]
    height: int

    @classmethod
    def of(cls, I: MonomialIdeal) -> MinPrimeGraph:
        mins = minimal_primes(I)
        heights = {p.height for p in mins}
        if len(heights) != 1:
            raise HypothesisError(f"{I} is not equidimensional")
        h = heights.pop()
        edges = [(a, b) for a, b in combinations(range(len(mins)), 2)
                 if len(mins[a].members | mins[b].members) == h + 1]
        return cls(mins, edges, h)

    def components(self) -> list[list[int]]:
        adj = {i: [] for i in range(len(self.nodes))}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen: set[int] = set()
        comps = []
        for start in range(len(self.nodes)):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            todo = deque([start])
            while todo:
                a = todo.popleft()
                for b in adj[a]:
                    if b not in seen:
                        seen.add(b)
                        comp.append(b)
                        todo.append(b)
            comps.append(sorted(comp))
        return comps

    def spanning_tree(self) -> list[tuple[int, int]]:
        adj = {i: [] for i in range(len(self.nodes))}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        tree = []
        seen = {0}
        todo = deque([0])
        while todo:
            a = todo.popleft()
            for b in adj[a]:
                if b not in seen:
                    seen.add(b)
                    tree.append((a, b))
                    todo.append(b)
        return tree


def is_connected_codim_one(I: MonomialIdeal) -> Verdict:
    """Connectedness of the minimal-prime graph.

    Not-equidimensional input gets False with reason ``"not-equidimensional"``.
    The certificate is either the spanning-tree edges (as prime pairs) or a
    split of Min(I) into the component of the first prime and the rest.
    """
    I.require_proper("is_connected_codim_one")
    if not is_equidimensional(I):
        return Verdict(False, reason="not-equidimensional")
    g = MinPrimeGraph.of(I)
    comps = g.components()
    if len(comps) == 1:
        tree = [(str(g.nodes[a]), str(g.nodes[b])) for a, b in g.spanning_tree()]
        return Verdict(True, witness={"tree": tree})
    first = set(comps[0])
    side_a = [str(g.nodes[i]) for i in comps[0]]
    side_b = [str(g.nodes[i]) for i in range(len(g.nodes)) if i not in first]
    return Verdict(False, witness={"bipartition": [side_a, side_b]}, reason="disconnected")


@dataclass
class LemmaLocReport:
    T: frozenset[int]
    a: bool
    b: bool
    c: bool

    @property
    def agree(self) -> bool:
        return self.a == self.b == self.c


def lemma_loc_hypothesis(I: MonomialIdeal, T) -> bool:
    """Every (|T|-1)-subset of T divides some minimal generator."""
    T = sorted(T)
    for sub in combinations(T, len(T) - 1):
        if not any(all(g[i] for i in sub) for g in I.gens):
            return False
    return True


def lemma_loc_equivalence(I: MonomialIdeal, T) -> LemmaLocReport:
    """Evaluate the three equivalent conditions for a matroidal I and T ⊆ supp(I).

    (a) no generator is divisible by the product of T;
    (b) killing T gives the same localization as killing any |T|-1 of its variables;
    (c) no associated prime meets T in exactly one variable.
    """
    T = frozenset(T)
    if not T:
        raise HypothesisError("T must be nonempty")
    if not is_matroidal(I):
        raise HypothesisError(f"{I} is not matroidal")
    if not T <= I.support():
        raise HypothesisError("T must lie inside supp(I)")
    if not lemma_loc_hypothesis(I, T):
        raise HypothesisError("some (t-1)-subset of T divides no generator")
    a = not any(all(g[i] for i in T) for g in I.gens)
    full = localize_kill(I, T)
    b = all(localize_kill(I, T - {x}) == full for x in T)
    c = all(len(p.members & T) != 1 for p in associated_primes(I))
    return LemmaLocReport(T, a, b, c)
