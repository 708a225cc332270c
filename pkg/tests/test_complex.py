from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from simphopf.complex import (
    build_complex,
    canonical_sign,
    compute_fundamental_cycle,
    cycle_boundary,
    enumerate_faces,
)
from simphopf.errors import (
    DegenerateFacet,
    DimensionOutOfRange,
    Disconnected,
    NonOrientable,
    NotClosed,
    NotPure,
)
from simphopf.fixtures import boundary_sphere

from conftest import RP2
from oracles import brute_force_orientations, inversions_sign


def test_boundary_of_simplex_f_vectors(s2, s3):
    assert s2.f_vector == (4, 6, 4)
    assert s3.f_vector == (5, 10, 10, 5)


def test_open_complex_rejected():
    with pytest.raises(NotClosed) as exc:
        build_complex([(0, 1, 2), (1, 2, 3)])
    assert (0, 1) in exc.value.ridges


def test_mixed_dimensions_rejected():
    with pytest.raises(NotPure):
        build_complex([(0, 1, 2), (1, 2)])


def test_repeated_vertex_rejected():
    with pytest.raises(DegenerateFacet):
        build_complex([(0, 0, 1)])


def test_two_spheres_are_disconnected():
    a = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    b = [tuple(v + 10 for v in f) for f in a]
    with pytest.raises(Disconnected):
        build_complex(a + b)


def test_sparse_ids_normalized_in_order():
    c = build_complex([(10, 20, 30), (10, 20, 40), (10, 30, 40), (20, 30, 40)])
    assert c.original_ids == (10, 20, 30, 40)
    assert c.facets == ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


def test_ridges_lie_in_two_facets(hopf):
    c, _ = hopf
    for r in c.faces[c.dim - 1]:
        assert len(c.ridge_facets(r)) == 2


def test_enumerate_faces(s2, s3):
    edges = enumerate_faces(s2, 1)
    assert len(edges) == 6 and edges[0] == (0, 1) and edges[-1] == (2, 3)
    assert len(enumerate_faces(s3, 2)) == 10
    with pytest.raises(DimensionOutOfRange):
        enumerate_faces(s2, 3)


def test_canonical_sign_examples():
    assert canonical_sign([2, 0, 1]) == ((0, 1, 2), 1)
    assert canonical_sign([1, 0]) == ((0, 1), -1)
    assert canonical_sign([0, 1, 2, 3]) == ((0, 1, 2, 3), 1)
    with pytest.raises(DegenerateFacet):
        canonical_sign([1, 1])


@given(st.lists(st.integers(0, 50), min_size=1, max_size=8, unique=True))
def test_canonical_sign_is_inversion_parity(vertices):
    s, sign = canonical_sign(vertices)
    assert s == tuple(sorted(vertices))
    assert sign == inversions_sign(vertices)
    assert canonical_sign(s) == (s, 1)


@pytest.mark.parametrize("d", [2, 3])
def test_boundary_sphere_signs_alternate(d):
    c = boundary_sphere(d)
    cycle = compute_fundamental_cycle(c)
    top = d + 1
    anchor = cycle[c.facets[0]]
    assert anchor == 1
    for f in c.facets:
        (omitted,) = set(range(top + 1)) - set(f)
        # (-1)^i pattern up to the global sign fixed by the anchor
        assert cycle[f] == anchor * (-1) ** (omitted - top)


@pytest.mark.parametrize("d", [2, 3])
def test_exactly_two_fundamental_cycles(d):
    c = boundary_sphere(d)
    found = brute_force_orientations(c.facets)
    assert len(found) == 2
    cycle = compute_fundamental_cycle(c).as_dict()
    assert cycle in found
    assert {f: -e for f, e in cycle.items()} in found


def test_fundamental_cycle_is_a_cycle(hopf, join_s3):
    for c in (hopf[0], join_s3):
        assert cycle_boundary(compute_fundamental_cycle(c)) == {}


def test_fundamental_cycle_deterministic(hopf):
    c, _ = hopf
    assert compute_fundamental_cycle(c).epsilon == compute_fundamental_cycle(c).epsilon


def test_projective_plane_not_orientable():
    assert brute_force_orientations(RP2) == []
    c = build_complex(RP2)
    assert c.f_vector == (6, 15, 10)
    with pytest.raises(NonOrientable):
        compute_fundamental_cycle(c)


def test_vertex_permutation_keeps_face_counts(s3):
    for perm in list(permutations(range(5)))[:10]:
        c = build_complex([tuple(perm[v] for v in f) for f in s3.facets])
        assert c.f_vector == s3.f_vector
