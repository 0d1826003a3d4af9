import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import all_faces, reduced_betti
from polymat import SimplicialComplex, reduced_homology_ranks

# six-vertex real projective plane
RP2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
       (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]


def test_hollow_triangle():
    K = SimplicialComplex(3, [{0, 1}, {1, 2}, {0, 2}])
    assert reduced_homology_ranks(K) == [0, 0, 1]


def test_two_points():
    assert reduced_homology_ranks(SimplicialComplex(2, [{0}, {1}])) == [0, 1]


def test_tetrahedron_boundary():
    K = SimplicialComplex(4, itertools.combinations(range(4), 3))
    assert reduced_homology_ranks(K) == [0, 0, 0, 1]
    assert K.reduced_euler_characteristic() == 1


def test_irrelevant_and_void():
    assert reduced_homology_ranks(SimplicialComplex(3, [()])) == [1]
    assert reduced_homology_ranks(SimplicialComplex(3)) == []


def test_projective_plane_depends_on_field():
    K = SimplicialComplex(6, RP2)
    assert K.f_vector() == [1, 6, 15, 10]
    assert reduced_homology_ranks(K, "Q") == [0, 0, 0, 0]
    assert reduced_homology_ranks(K, 2) == [0, 0, 1, 1]
    assert reduced_homology_ranks(K, 3) == [0, 0, 0, 0]


def test_links():
    K = SimplicialComplex(6, RP2)
    # the link of a vertex in a closed surface is a cycle
    lk = K.link({0})
    assert sorted(map(sorted, lk.facets)) == [[1, 2], [1, 5], [2, 3], [3, 4], [4, 5]]
    assert reduced_homology_ranks(lk) == [0, 0, 1]
    assert K.link({0, 1, 2}).facets == [frozenset()]


def test_facets_are_maximal_and_bounded():
    K = SimplicialComplex(3, [{0, 1}, {0}, {0, 1}])
    assert K.facets == [frozenset({0, 1})]
    with pytest.raises(ValueError):
        SimplicialComplex(2, [{0, 2}])


complexes = st.lists(st.frozensets(st.integers(0, 4), min_size=1, max_size=4), min_size=1, max_size=5)


@given(complexes, st.sampled_from(["Q", 2, 3]))
def test_homology_matches_oracle(facets, field):
    K = SimplicialComplex(5, facets)
    assert {frozenset(f) for f in K.faces()} == all_faces(facets)
    got = reduced_homology_ranks(K, field)
    assert got == reduced_betti(facets, None if field == "Q" else field)
    # Euler-Poincare
    assert sum((-1) ** (k - 1) * b for k, b in enumerate(got)) == K.reduced_euler_characteristic()
