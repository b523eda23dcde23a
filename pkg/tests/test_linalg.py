"""Exact linear algebra: matrices, RREF, kernels, quotients."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from univext.linalg import (Mat, QuotientSpace, Subspace, frac, kernel,
                            quotient, rank, row_space, rref, solve, unit_vec,
                            zeros_vec)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8)


def small_matrix(rows, cols):
    return st.lists(
        st.lists(rationals, min_size=cols, max_size=cols),
        min_size=rows, max_size=rows).map(Mat)


def test_mat_basics():
    m = Mat([[1, 2], [3, 4]])
    assert m.rows == 2 and m.cols == 2
    assert m.det() == -2
    inv = m.inverse()
    assert (m * inv).data == Mat.identity(2).data
    assert m.matvec([1, 0]) == [Fraction(1), Fraction(3)]


def test_zeros_keeps_column_count():
    m = Mat.zeros(0, 5)
    assert m.rows == 0 and m.cols == 5


def test_rref_pivots():
    m = Mat([[0, 2, 4], [1, 1, 1]])
    red, pivots = rref(m)
    assert pivots == [0, 1]
    assert red.row(0)[:2] == [Fraction(1), Fraction(0)]
    assert rank(m) == 2


@given(small_matrix(3, 4))
@settings(max_examples=40, deadline=None)
def test_kernel_is_in_the_nullspace(m):
    for v in kernel(m).basis_vectors():
        assert all(c == 0 for c in m.matvec(v))
    assert rank(m) + kernel(m).dim == 4


@given(small_matrix(3, 3),
       st.lists(rationals, min_size=3, max_size=3))
@settings(max_examples=40, deadline=None)
def test_solve_roundtrip(m, x):
    b = m.matvec(x)
    s = solve(m, b)
    assert s is not None
    assert m.matvec(s) == b


def test_solve_inconsistent():
    m = Mat([[1, 0], [1, 0]])
    assert solve(m, [1, 2]) is None


def test_subspace_canonical_equality():
    a = Subspace.span(3, [[1, 1, 0], [0, 0, 1]])
    b = Subspace.span(3, [[1, 1, 1], [2, 2, 1]])
    assert a == b
    assert a.contains([3, 3, 5])
    assert not a.contains([1, 0, 0])


def test_subspace_coordinates():
    s = Subspace.span(3, [[1, 0, 1], [0, 1, 0]])
    v = [2, -1, 2]
    coords = s.coordinates(v)
    got = zeros_vec(3)
    for c, bv in zip(coords, s.basis_vectors()):
        got = [g + c * x for g, x in zip(got, bv)]
    assert got == [frac(c) for c in v]


def test_quotient_projection_and_section():
    w = Subspace.span(3, [[1, 1, 0]])
    q = quotient(3, w)
    assert q.dim == 2
    # the denominator dies
    assert all(c == 0 for c in q.project([1, 1, 0]))
    # project . lift = identity on the quotient
    for i in range(q.dim):
        e = unit_vec(q.dim, i)
        assert q.project(q.lift(e)) == e


@given(st.lists(rationals, min_size=3, max_size=3))
@settings(max_examples=30, deadline=None)
def test_quotient_well_defined(v):
    w = Subspace.span(3, [[1, 2, 0], [0, 0, 3]])
    q = quotient(3, w)
    shifted = [a + b for a, b in zip(v, [Fraction(2), Fraction(4), Fraction(7)])]
    assert q.project([frac(c) for c in v]) == q.project(shifted)


def test_row_space():
    m = Mat([[1, 2], [2, 4], [0, 1]])
    assert row_space(m).dim == 2
