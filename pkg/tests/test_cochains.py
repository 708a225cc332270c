import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from simphopf.cochains import (
    Chain,
    Cochain,
    SparseRationalMatrix,
    coboundary,
    coboundary_matrix,
    cup,
    pair,
)
from simphopf.complex import compute_fundamental_cycle
from simphopf.errors import DegreeMismatch, DimensionOutOfRange, MixedComplexes
from simphopf.fixtures import boundary_sphere


def random_cochain(c, k, rng, density=0.7):
    return Cochain(
        c,
        k,
        {
            s: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            for s in c.faces[k]
            if rng.random() < density
        },
    )


def test_coboundary_of_vertex_indicator(s2):
    a = Cochain(s2, 0, {(0,): 1})
    da = coboundary(a)
    for (i, j) in s2.faces[1]:
        assert da((i, j)) == (-1 if i == 0 else 0)


def test_constants_are_cocycles(hopf):
    c, _ = hopf
    a = Cochain(c, 0, {s: 7 for s in c.faces[0]})
    assert coboundary(a).is_zero()


def test_coboundary_out_of_range(s2):
    with pytest.raises(DimensionOutOfRange):
        coboundary(Cochain(s2, 2, {}))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 1))
def test_coboundary_squares_to_zero(seed, k):
    c = boundary_sphere(3)
    a = random_cochain(c, k, random.Random(seed))
    assert coboundary(coboundary(a)).is_zero()


def test_cup_degree_zero_front_vertex(s2):
    a = Cochain(s2, 0, {(1,): 3})
    b = Cochain(s2, 1, {(1, 2): 5, (0, 1): 2})
    ab = cup(a, b)
    assert ab((1, 2)) == 15
    assert ab((0, 1)) == 0  # front vertex 0 carries a = 0


def test_cup_unit(hopf):
    c, _ = hopf
    one = Cochain(c, 0, {s: 1 for s in c.faces[0]})
    rng = random.Random(3)
    for k in (1, 2, 3):
        b = random_cochain(c, k, rng)
        assert cup(one, b) == b


def test_cup_errors(s2, s3):
    with pytest.raises(DimensionOutOfRange):
        cup(Cochain(s2, 1, {}), Cochain(s2, 2, {}))
    with pytest.raises(MixedComplexes):
        cup(Cochain(s2, 0, {}), Cochain(s3, 0, {}))


@pytest.mark.parametrize("fixture", ["s3", "join_s3"])
def test_leibniz_rule(fixture, request):
    c = request.getfixturevalue(fixture)
    rng = random.Random(11)
    m = c.dim
    for k in range(m):
        for l in range(m - k):
            a, b = random_cochain(c, k, rng), random_cochain(c, l, rng)
            lhs = coboundary(cup(a, b))
            rhs = cup(coboundary(a), b) + (-1) ** k * cup(a, coboundary(b))
            assert lhs == rhs, (k, l)


def test_evaluation_alternates(hopf):
    c, _ = hopf
    a = random_cochain(c, 2, random.Random(5), density=1.0)
    for s in c.faces[2][:20]:
        u, v, w = s
        assert a((v, u, w)) == -a(s)
        assert a((w, u, v)) == a(s)


def test_pair_basics(s2):
    z = Chain(s2, 2, {(0, 1, 2): 1})
    assert pair(Cochain(s2, 2, {}), z) == 0
    assert pair(Cochain(s2, 2, {(0, 1, 2): 1}), z) == 1
    with pytest.raises(DegreeMismatch):
        pair(Cochain(s2, 1, {}), z)


def test_pair_bilinear(hopf):
    c, _ = hopf
    rng = random.Random(2)
    z = Chain.from_cycle(compute_fundamental_cycle(c))
    a, b = random_cochain(c, 3, rng), random_cochain(c, 3, rng)
    x, y = Fraction(3, 7), Fraction(-2)
    assert pair(a * x + b * y, z) == x * pair(a, z) + y * pair(b, z)


def test_stokes_on_fundamental_cycle(hopf, join_s3):
    rng = random.Random(8)
    for c in (hopf[0], join_s3):
        z = Chain.from_cycle(compute_fundamental_cycle(c))
        for _ in range(10):
            a = random_cochain(c, c.dim - 1, rng)
            assert pair(coboundary(a), z) == 0


def test_coboundary_matrix_shapes(s2, s3):
    m = coboundary_matrix(s3, 1)
    assert m.shape == (10, 10)
    assert all(len(r) == 3 and set(r.values()) <= {1, -1} for r in m.rows())
    m0 = coboundary_matrix(s2, 0)
    assert m0.shape == (6, 4)
    assert all(sorted(r.values()) == [-1, 1] for r in m0.rows())
    with pytest.raises(DimensionOutOfRange):
        coboundary_matrix(s2, 2)


def test_coboundary_matrices_compose_to_zero(hopf):
    c, _ = hopf
    for k in range(c.dim - 1):
        assert coboundary_matrix(c, k + 1).matmul(coboundary_matrix(c, k)).nnz == 0


def test_matrix_agrees_with_cochain_coboundary(hopf):
    c, _ = hopf
    a = random_cochain(c, 1, random.Random(4))
    assert coboundary_matrix(c, 1).matvec(a.to_vector()) == coboundary(a).to_vector()


def test_rows_have_n_plus_one_entries(hopf):
    c, _ = hopf
    n = 2
    assert all(len(r) == n + 1 for r in coboundary_matrix(c, n - 1).rows())


def test_sparse_matrix_invariants():
    with pytest.raises(ValueError):
        SparseRationalMatrix(1, 1, ((0, 0, Fraction(0)),))
    with pytest.raises(ValueError):
        SparseRationalMatrix(1, 1, ((0, 0, Fraction(1)), (0, 0, Fraction(2))))
    with pytest.raises(IndexError):
        SparseRationalMatrix(1, 1, ((1, 0, Fraction(1)),))
