"""Current algebras A (x) g and semidirect products."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from univext import calg as ca
from univext import current as cu
from univext import liealg as la
from univext.linalg import unit_vec, zeros_vec

sl2 = la.catalog("sl2")


def test_tensor_algebra_dims_and_validity():
    a = ca.functions_on_points(2)
    t = cu.tensor_algebra(a, sl2)
    assert t.dim == 6
    la.validate(t)
    # point algebras commute with each other
    s0 = cu.tensor_slot(sl2, 0, 0)
    s1 = cu.tensor_slot(sl2, 1, 1)
    assert t.basis_bracket(s0, s1) == zeros_vec(6)


def test_semidirect_dims_and_validity():
    a = ca.functions_on_points(2)
    s = cu.semidirect(a, sl2)
    assert s.dim == 9
    la.validate(s)


def test_semidirect_mixed_bracket():
    # [(0, y), (c (x) x, 0)] = (c (x) [y, x], 0)
    a = ca.truncated_poly(2)
    s = cu.semidirect(a, sl2)
    nt = a.dim * sl2.dim
    h = unit_vec(s.dim, nt + 2)
    te = unit_vec(s.dim, cu.tensor_slot(sl2, 1, 0))  # t (x) e
    out = s.bracket(h, te)
    expect = zeros_vec(s.dim)
    expect[cu.tensor_slot(sl2, 1, 0)] = Fraction(2)  # [h,e] = 2e
    assert out == expect


def test_inclusions_are_homs():
    a = ca.square_zero_plane()
    assert cu.tensor_inclusion(a, sl2).is_hom()
    assert cu.lie_inclusion(a, sl2).is_hom()


@pytest.mark.parametrize("a,g", [
    (ca.functions_on_points(2), sl2),
    (ca.truncated_poly(3), la.catalog("so3")),
    (ca.square_zero_plane(), sl2)])
def test_unitalisation_iso(a, g):
    iso = cu.unitalisation_iso(a, g)
    assert iso.is_hom()
    assert iso.matrix.det() != 0


def test_perfectness():
    assert cu.is_perfect_current(ca.functions_on_points(3), sl2)
    assert cu.is_perfect_current(ca.truncated_poly(2), sl2)
    assert not cu.is_perfect_current(ca.zero_product_line(), sl2)


def test_elem_bracket_matches_explicit_tensor_algebra():
    a = ca.functions_on_points(2)
    t = cu.tensor_algebra(a, sl2)
    carrier = cu.SeqCarrier()
    u = cu.tensor_element([(0, 0, 2), (1, 2, -1)])
    v = cu.tensor_element([(0, 1, 1), (1, 0, 3)])

    def to_vec(elem):
        out = zeros_vec(6)
        for (k, x), c in elem.items():
            out[cu.tensor_slot(sl2, k, x)] = c
        return out

    assert to_vec(cu.elem_bracket(carrier, sl2, u, v)) \
        == t.bracket(to_vec(u), to_vec(v))


def test_semidirect_bracket_oracle_matches_explicit():
    a = ca.functions_on_points(2)
    s = cu.semidirect(a, sl2)
    carrier = cu.SeqCarrier()
    z1 = cu.tensor_element([(0, 0, 1)])
    z2 = cu.tensor_element([(1, 1, 2)])
    y1 = [Fraction(0), Fraction(0), Fraction(1)]
    y2 = [Fraction(1), Fraction(0), Fraction(0)]

    def to_vec(z, y):
        out = zeros_vec(9)
        for (k, x), c in z.items():
            out[cu.tensor_slot(sl2, k, x)] = c
        for x, c in enumerate(y):
            out[6 + x] = c
        return out

    zr, yr = cu.semidirect_bracket(carrier, sl2, (z1, y1), (z2, y2))
    assert to_vec(zr, yr) == s.bracket(to_vec(z1, y1), to_vec(z2, y2))


elem_strategy = st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(-3, 3)),
    max_size=4).map(cu.tensor_element)


@given(elem_strategy, elem_strategy, elem_strategy)
@settings(max_examples=40, deadline=None)
def test_elem_bracket_jacobi(u, v, w):
    carrier = cu.SeqCarrier()

    def br(x, y):
        return cu.elem_bracket(carrier, sl2, x, y)

    s = cu.elem_add(br(br(u, v), w), br(br(v, w), u))
    s = cu.elem_add(s, br(br(w, u), v))
    assert s == {}


def test_delta_matrix_is_a_derivation_action():
    a = ca.truncated_poly(2)
    t = cu.tensor_algebra(a, sl2)
    for y in range(3):
        d = cu.delta_matrix(a.dim, sl2, unit_vec(3, y))
        for s1 in range(t.dim):
            for s2 in range(t.dim):
                lhs = d.matvec(t.basis_bracket(s1, s2))
                rhs = [p + q for p, q in zip(
                    t.bracket(d.col(s1), unit_vec(t.dim, s2)),
                    t.bracket(unit_vec(t.dim, s1), d.col(s2)))]
                assert lhs == rhs


def test_laurent_carrier_product():
    c = cu.LaurentCarrier()
    assert c.product(2, -3) == [(-1, Fraction(1))]
    u = cu.tensor_element([(1, 0, 1)])
    v = cu.tensor_element([(-1, 1, 1)])
    out = cu.elem_bracket(c, sl2, u, v)
    assert out == {(0, 2): Fraction(1)}  # t (x) e, t^-1 (x) f -> 1 (x) h
