"""Universal invariant bilinear forms (V_g, kappa_g)."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from univext import invforms as iv
from univext import liealg as la
from univext.linalg import Mat, unit_vec

DIM_V = {"sl2": 1, "sl3": 1, "so3": 1, "sl2_plus_sl2": 2,
         "heisenberg3": 3, "abelian(1)": 1, "abelian(2)": 3, "abelian(4)": 10}


def test_sym_square_indexing():
    s = iv.SymSquare(la.catalog("sl2"))
    assert s.dim == 6
    seen = {s.index(i, j) for (i, j) in s.pairs()}
    assert seen == set(range(6))
    assert s.index(2, 0) == s.index(0, 2)


@pytest.mark.parametrize("name,expect", sorted(DIM_V.items()))
def test_dim_v(name, expect):
    u = iv.universal_form(la.catalog(name))
    assert u.dim_v == expect


@pytest.mark.parametrize("name", sorted(DIM_V))
def test_kappa_invariant_and_spans(name):
    g = la.catalog(name)
    u = iv.universal_form(g)
    assert u.image_spans()
    n = g.dim
    for i in range(n):
        for j in range(n):
            bij = g.basis_bracket(i, j)
            for k in range(n):
                assert u.kappa(bij, unit_vec(n, k)) \
                    == u.kappa(unit_vec(n, i), g.basis_bracket(j, k))


@pytest.mark.parametrize("name", sorted(DIM_V))
def test_factor_form_roundtrip(name):
    g = la.catalog(name)
    u = iv.universal_form(g)
    forms = iv.invariant_forms(g)
    assert len(forms) >= u.dim_v
    for beta in forms:
        psi = iv.factor_form(u, beta)
        for i in range(g.dim):
            for j in range(i, g.dim):
                assert psi.matvec(u.kappa_basis(i, j)) \
                    == list(beta.values[i][j])


def test_factor_form_rejects_noninvariant():
    g = la.catalog("sl2")
    u = iv.universal_form(g)
    beta = iv.BilinearForm.from_matrix(Mat.identity(3))
    assert not iv.is_invariant(g, beta)
    with pytest.raises(iv.NotInvariant):
        iv.factor_form(u, beta)


def test_killing_factors_through_kappa():
    g = la.catalog("sl2")
    u = iv.universal_form(g)
    psi = iv.factor_form(u, iv.killing_bilinear(g))
    # K = 8 * kappa on sl2 (kappa(h,h) = 1 normalisation)
    assert psi.matvec(u.kappa_basis(2, 2)) == [8]


def test_induced_map_functorial():
    g = la.catalog("sl2")
    u = iv.universal_form(g)
    # the automorphism e->f, f->e, h->-h
    m = Mat([[0, 1, 0], [1, 0, 0], [0, 0, -1]])
    f = la.LieHom(g, g, m)
    assert f.is_hom()
    fk = iv.induced_map(f, u, u)
    f2k = iv.induced_map(f.compose(f), u, u)
    assert fk * fk == f2k
    assert f2k == Mat.identity(u.dim_v)


@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
@settings(max_examples=40, deadline=None)
def test_kappa_symmetric(x, y):
    u = iv.universal_form(la.catalog("sl2"))
    assert u.kappa(x, y) == u.kappa(y, x)
