"""Cohen-Macaulay test through polarization and Reisner's criterion.

This path never touches the decomposition or classification code: it
polarizes I, builds the Stanley-Reisner complex by brute force over vertex
subsets, and checks that every link has vanishing reduced homology below
its top dimension.
"""

from __future__ import annotations

from .errors import PolymatError
from .ideal import MonomialIdeal, VariableSet
from .simplicial import SimplicialComplex, _bits, _mask, reduced_homology_ranks
from .verdict import Verdict


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, list[tuple[int, int]]]:
    """Squarefree polarization of I.

    A variable whose largest exponent e over G(I) is at least 2 becomes
    ``name#1 .. name#e`` and x^k maps to the product of the first k copies;
    other variables keep their name.  The returned map lists, for every new
    variable, (original index, copy number starting at 1).
    """
    I.require_proper("polarize")
    top = [max(g[i] for g in I.gens) for i in range(I.n)]
    names: list[str] = []
    mapping: list[tuple[int, int]] = []
    first: list[int] = []
    for i, name in enumerate(I.vars.names):
        first.append(len(names))
        if top[i] <= 1:
            names.append(name)
            mapping.append((i, 1))
        else:
            for k in range(1, top[i] + 1):
                names.append(f"{name}#{k}")
                mapping.append((i, k))
    N = len(names)
    gens = []
    for g in I.gens:
        e = [0] * N
        for i, k in enumerate(g):
            for c in range(k):
                e[first[i] + c] = 1
        gens.append(tuple(e))
    return MonomialIdeal(VariableSet(tuple(names)), gens), mapping


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """The complex of vertex sets F whose monomial x_F is not in I."""
    if not I.is_squarefree():
        raise PolymatError(f"{I} is not squarefree")
    if I.is_unit():
        raise PolymatError("the unit ideal has the void complex")
    n = I.n
    gmasks = [_mask(i for i, e in enumerate(g) if e) for g in I.gens]
    faces = [F for F in range(1 << n) if not any(g & F == g for g in gmasks)]
    return SimplicialComplex(I.vars, masks=faces)


def stanley_reisner_ideal(K: SimplicialComplex) -> MonomialIdeal:
    """Generated by the minimal non-faces of K."""
    n = K.vertices.n
    faces = K.face_masks
    gens = []
    for F in range(1, 1 << n):
        if F in faces:
            continue
        if all((F & ~(1 << v)) in faces for v in _bits(F)):
            gens.append(tuple(1 if F >> i & 1 else 0 for i in range(n)))
    if not gens:
        return MonomialIdeal.zero(K.vertices)
    return MonomialIdeal(K.vertices, gens)


def reisner_failure(K: SimplicialComplex, field: int | str = "Q"):
    """First face whose link has nonzero reduced homology below its dimension, else None.

    Faces are scanned from largest to smallest, so small links go first.
    """
    order = sorted(K.face_masks, key=lambda m: (-bin(m).count("1"), _bits(m)))
    for F in order:
        lk = K.link(F)
        betti = reduced_homology_ranks(lk, field)
        # betti[k] is in dimension k-1; require zero for dimensions < dim lk
        if any(betti[: lk.dim + 1]):
            return frozenset(_bits(F)), betti
    return None


def is_cm_reisner(I: MonomialIdeal, field: int | str = "Q") -> Verdict:
    """Cohen-Macaulayness of S/I from the Stanley-Reisner complex of its polarization."""
    P, _ = polarize(I)
    K = stanley_reisner_complex(P)
    fail = reisner_failure(K, field)
    if fail is None:
        return Verdict(True)
    face, betti = fail
    return Verdict(False, witness={"face": sorted(P.vars.names[i] for i in face), "betti": betti})
