"""Finite simplicial complexes on a labelled vertex set, with reduced homology.

Faces are stored as bitmasks over the vertex indices.  A complex with no
facets at all is the void complex; the complex {∅} has the single facet 0.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable

from .ideal import VariableSet
from .linalg import rank


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    masks = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in masks:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lambda m: (bin(m).count("1"), _bits(m))))


class SimplicialComplex:
    def __init__(self, vertices: VariableSet | int, facets: Iterable[Iterable[int]] = (), *, masks=None):
        if isinstance(vertices, int):
            vertices = VariableSet.standard(vertices)
        self.vertices = vertices
        if masks is None:
            masks = [_mask(f) for f in facets]
        if any(m >> vertices.n for m in masks):
            raise ValueError("facet uses a vertex outside the vertex set")
        self.facet_masks = _maximal(masks)

    @property
    def facets(self) -> list[frozenset[int]]:
        return [frozenset(_bits(m)) for m in self.facet_masks]

    def is_void(self) -> bool:
        return not self.facet_masks

    @cached_property
    def dim(self) -> int:
        """Dimension; -1 for {∅} and for the void complex."""
        return max((bin(m).count("1") - 1 for m in self.facet_masks), default=-1)

    def is_pure(self) -> bool:
        return len({bin(m).count("1") for m in self.facet_masks}) <= 1

    @cached_property
    def face_masks(self) -> frozenset[int]:
        faces = set()
        for f in self.facet_masks:
            sub = f
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return frozenset(faces)

    def faces(self) -> list[frozenset[int]]:
        return [frozenset(_bits(m)) for m in sorted(self.face_masks, key=lambda m: (bin(m).count("1"), _bits(m)))]

    def __contains__(self, face) -> bool:
        m = face if isinstance(face, int) else _mask(face)
        return any(m & f == m for f in self.facet_masks)

    def f_vector(self) -> list[int]:
        """Face counts by dimension -1, 0, ..., dim."""
        counts = [0] * (self.dim + 2)
        for m in self.face_masks:
            counts[bin(m).count("1")] += 1
        return counts

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (k - 1) * c for k, c in enumerate(self.f_vector()))

    def link(self, face) -> SimplicialComplex:
        m = face if isinstance(face, int) else _mask(face)
        return SimplicialComplex(self.vertices, masks=[f & ~m for f in self.facet_masks if f & m == m])

    def facet_graph_connected(self) -> bool:
        """Facets adjacent when they meet in a codimension-one face."""
        if len(self.facet_masks) <= 1:
            return True
        need = self.dim
        fs = self.facet_masks
        seen = {0}
        todo = deque([0])
        while todo:
            a = todo.popleft()
            for b in range(len(fs)):
                if b not in seen and bin(fs[a] & fs[b]).count("1") == need:
                    seen.add(b)
                    todo.append(b)
        return len(seen) == len(fs)

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex) and self.vertices == other.vertices
                and self.facet_masks == other.facet_masks)

    def __repr__(self):
        names = self.vertices.names
        fs = ["{" + ",".join(names[i] for i in _bits(m)) + "}" for m in self.facet_masks]
        return f"SimplicialComplex([{', '.join(fs)}])"


def boundary_rows(faces_k: list[int], index_km1: dict[int, int]) -> list[dict[int, int]]:
    """Rows of the transposed boundary map C_k -> C_{k-1}, one row per k-face."""
    rows = []
    for f in faces_k:
        row = {}
        for j, v in enumerate(_bits(f)):
            row[index_km1[f & ~(1 << v)]] = -1 if j & 1 else 1
        rows.append(row)
    return rows


def reduced_homology_ranks(K: SimplicialComplex, field: int | str = "Q") -> list[int]:
    """Reduced Betti numbers in dimensions -1, 0, ..., dim K (empty for the void complex)."""
    if K.is_void():
        return []
    by_size: dict[int, list[int]] = {}
    for m in K.face_masks:
        by_size.setdefault(bin(m).count("1"), []).append(m)
    top = K.dim + 1  # largest face size
    counts = [len(by_size.get(k, ())) for k in range(top + 1)]
    # ranks[k] = rank of the boundary from faces of size k to size k-1
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        lower = sorted(by_size[k - 1])
        index = {m: i for i, m in enumerate(lower)}
        ranks[k] = rank(boundary_rows(sorted(by_size[k]), index), field)
    return [counts[k] - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def strongly_connected(K: SimplicialComplex) -> bool:
    if not K.is_pure():
        raise ValueError("strong connectivity is defined for pure complexes only")
    return K.facet_graph_connected()
