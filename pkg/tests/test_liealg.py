"""Structure-constant Lie algebras and the catalog."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from univext import liealg as la
from univext.linalg import Mat, unit_vec, zeros_vec

ALL = [la.catalog(n) for n in la.CATALOG_NAMES]


@pytest.mark.parametrize("g", ALL, ids=la.CATALOG_NAMES)
def test_catalog_valid(g):
    la.validate(g)  # no exception


def test_validation_errors():
    # non-antisymmetric structure constants
    bad = la.LieAlgebra.from_brackets(2, {(0, 1): [1, 0]})
    bad.c[1][0][0] = 0
    with pytest.raises(la.ValidationError):
        la.validate(bad)
    # Jacobi failure: [e0,e1] = e2 with [e1,e2] = e1 has a nonzero cyclic sum
    bad2 = la.LieAlgebra.from_brackets(
        3, {(0, 1): [0, 0, 1], (1, 2): [0, 1, 0]})
    with pytest.raises(la.ValidationError) as exc:
        la.validate(bad2)
    assert "(0, 1, 2)" in str(exc.value) or "0,1,2" in str(exc.value)


def test_sl2_bracket_convention():
    g = la.catalog("sl2")
    e, f, h = (unit_vec(3, i) for i in range(3))
    assert g.bracket(h, e) == [2, 0, 0]
    assert g.bracket(h, f) == [0, -2, 0]
    assert g.bracket(e, f) == [0, 0, 1]


def test_killing_sl2():
    k = la.killing_form(la.catalog("sl2"))
    assert k[2, 2] == 8 and k[0, 1] == 4 and k[0, 0] == 0
    assert k.det() == -128


def test_killing_nilpotent_vanishes():
    assert la.killing_form(la.catalog("heisenberg3")).is_zero()
    assert la.killing_form(la.catalog("abelian(2)")).is_zero()


@pytest.mark.parametrize("name,semi,perf", [
    ("sl2", True, True), ("sl3", True, True), ("so3", True, True),
    ("sl2_plus_sl2", True, True), ("heisenberg3", False, False),
    ("abelian(2)", False, False)])
def test_semisimple_perfect(name, semi, perf):
    g = la.catalog(name)
    assert la.is_semisimple(g) is semi
    assert la.is_perfect(g) is perf


def test_derived_subalgebra():
    h = la.catalog("heisenberg3")
    d = la.derived_subalgebra(h)
    assert d.dim == 1 and d.contains([0, 0, 1])


@pytest.mark.parametrize("name,dim", [
    ("sl2", 1), ("heisenberg3", 3), ("abelian(2)", 4)])
def test_centroid_dims(name, dim):
    assert la.centroid(la.catalog(name)).dim == dim


def test_centroid_contains_identity_and_composition():
    for name in ("sl2", "heisenberg3", "sl2_plus_sl2"):
        g = la.catalog(name)
        n = g.dim
        cent = la.centroid(g)
        ident = [1 if r * n + c == r * n + r else 0
                 for r in range(n) for c in range(n)]
        assert cent.contains(ident)
        mats = [Mat([v[r * n:(r + 1) * n] for r in range(n)])
                for v in cent.basis_vectors()]
        for f1 in mats:
            for f2 in mats:
                prod = f1 * f2
                flat = [prod[r, c] for r in range(n) for c in range(n)]
                assert cent.contains(flat)


def test_killing_invariance_all_catalog():
    for g in ALL:
        k = la.killing_form(g)
        n = g.dim
        for i in range(n):
            for j in range(n):
                bij = g.basis_bracket(i, j)
                for l in range(n):
                    lhs = sum(bij[a] * k[a, l] for a in range(n))
                    bjl = g.basis_bracket(j, l)
                    rhs = sum(bjl[a] * k[i, a] for a in range(n))
                    assert lhs == rhs


def test_direct_sum():
    g = la.direct_sum(la.catalog("sl2"), la.catalog("so3"))
    la.validate(g)
    assert g.dim == 6
    # cross brackets vanish
    assert g.bracket(unit_vec(6, 0), unit_vec(6, 4)) == zeros_vec(6)


def test_hom_check():
    g = la.catalog("sl2")
    ident = la.LieHom(g, g, Mat.identity(3))
    assert ident.is_hom()
    flip = la.LieHom(g, g, Mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))
    assert not flip.is_hom()  # e<->f without negating h


def test_json_roundtrip():
    for g in ALL:
        d = la.to_json_dict(g)
        g2 = la.from_json_dict(json.loads(json.dumps(d)))
        assert g2.dim == g.dim and g2.c == g.c


@given(st.integers(min_value=0, max_value=4))
@settings(max_examples=5, deadline=None)
def test_abelian_everything_commutes(n):
    g = la.abelian(n)
    la.validate(g)
    assert la.derived_subalgebra(g).dim == 0


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
@settings(max_examples=50, deadline=None)
def test_bracket_antisymmetric_bilinear(x, y):
    g = la.catalog("sl2")
    assert g.bracket(x, y) == [-c for c in g.bracket(y, x)]
    two_x = [2 * c for c in x]
    assert g.bracket(two_x, y) == [2 * c for c in g.bracket(x, y)]
