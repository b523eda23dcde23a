"""Current algebras A (x) g and semidirect products (A (x) g) |x g.

For a finite-dimensional commutative algebra A the tensor Lie algebra and
the semidirect product are materialised as explicit structure-constant
algebras (slot (i, x) -> i*dim(g) + x).  For infinitely supported carriers
(sequence algebras, Laurent polynomials) elements are finitely supported
maps (carrier key, lie index) -> Q and only a bracket oracle is exposed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .calg import CommAlgebra, FinSuppSeq, LaurentPoly, unitalisation
from .liealg import LieAlgebra, LieHom, derived_subalgebra
from .linalg import Mat, frac, unit_vec, zeros_vec


def tensor_algebra(a: CommAlgebra, g: LieAlgebra) -> LieAlgebra:
    """A (x) g as an explicit Lie algebra, [a (x) x, b (x) y] = ab (x) [x,y]."""
    na, ng = a.dim, g.dim
    dim = na * ng
    brackets = {}
    for s in range(dim):
        i, x = divmod(s, ng)
        for t in range(s + 1, dim):
            j, y = divmod(t, ng)
            prod = a.basis_product(i, j)
            brk = g.basis_bracket(x, y)
            v = zeros_vec(dim)
            for k, pk in enumerate(prod):
                if pk == 0:
                    continue
                for z, bz in enumerate(brk):
                    if bz != 0:
                        v[k * ng + z] += pk * bz
            brackets[(s, t)] = v
    name = ""
    if a.name and g.name:
        name = f"{a.name}(x){g.name}"
    return LieAlgebra.from_brackets(dim, brackets, name)


def tensor_slot(g: LieAlgebra, i: int, x: int) -> int:
    return i * g.dim + x


def delta_matrix(a_dim: int, g: LieAlgebra, y) -> Mat:
    """delta_y on A (x) g: c (x) x -> c (x) [y, x], as a matrix."""
    ng = g.dim
    dim = a_dim * ng
    ady = g.ad(y)
    cols = []
    for s in range(dim):
        i, x = divmod(s, ng)
        col = zeros_vec(dim)
        for z in range(ng):
            if ady[z, x] != 0:
                col[i * ng + z] = ady[z, x]
        cols.append(col)
    return Mat.from_cols(cols)


def semidirect(a: CommAlgebra, g: LieAlgebra) -> LieAlgebra:
    """(A (x) g) |x g as an explicit Lie algebra.

    Basis: the tensor slots first, then a copy of g.
    [(z1,y1),(z2,y2)] = ([z1,z2] + delta_{y1} z2 - delta_{y2} z1, [y1,y2]).
    """
    t = tensor_algebra(a, g)
    nt, ng = t.dim, g.dim
    dim = nt + ng
    brackets = {}
    for s in range(nt):
        for u in range(s + 1, nt):
            brackets[(s, u)] = t.basis_bracket(s, u) + zeros_vec(ng)
    for x in range(ng):
        dx = delta_matrix(a.dim, g, unit_vec(ng, x))
        for s in range(nt):
            # [z, y] = -delta_y(z) in the tensor part
            v = [-c for c in dx.col(s)] + zeros_vec(ng)
            brackets[(s, nt + x)] = v
    for x in range(ng):
        for y in range(x + 1, ng):
            brackets[(nt + x, nt + y)] = (zeros_vec(nt)
                                          + g.basis_bracket(x, y))
    name = ""
    if a.name and g.name:
        name = f"({a.name}(x){g.name})|x{g.name}"
    return LieAlgebra.from_brackets(dim, brackets, name)


def tensor_inclusion(a: CommAlgebra, g: LieAlgebra) -> LieHom:
    """i: A (x) g -> (A (x) g) |x g, z -> (z, 0)."""
    t = tensor_algebra(a, g)
    s = semidirect(a, g)
    m = Mat.zeros(s.dim, t.dim)
    for j in range(t.dim):
        m.data[j][j] = Fraction(1)
    return LieHom(t, s, m)


def lie_inclusion(a: CommAlgebra, g: LieAlgebra) -> LieHom:
    """i_g: g -> (A (x) g) |x g, x -> (0, x)."""
    t_dim = a.dim * g.dim
    s = semidirect(a, g)
    m = Mat.zeros(s.dim, g.dim)
    for j in range(g.dim):
        m.data[t_dim + j][j] = Fraction(1)
    return LieHom(g, s, m)


def unitalisation_iso(a: CommAlgebra, g: LieAlgebra) -> LieHom:
    """A_1 (x) g -> (A (x) g) |x g, (lam, a) (x) w -> (a (x) w, lam w).

    The unitalisation basis is (1,0), e_1, ..., e_n, so slot (0, w) goes to
    the g copy and slot (i+1, w) to the tensor slot (i, w).
    """
    a1 = unitalisation(a)
    dom = tensor_algebra(a1, g)
    cod = semidirect(a, g)
    ng = g.dim
    m = Mat.zeros(cod.dim, dom.dim)
    for w in range(ng):
        m.data[a.dim * ng + w][tensor_slot(g, 0, w)] = Fraction(1)
        for i in range(a.dim):
            m.data[tensor_slot(g, i, w)][tensor_slot(g, i + 1, w)] \
                = Fraction(1)
    return LieHom(dom, cod, m)


def is_perfect_current(a: CommAlgebra, g: LieAlgebra) -> bool:
    t = tensor_algebra(a, g)
    return derived_subalgebra(t).dim == t.dim


# ---------------------------------------------------------------------------
# finitely supported tensor elements over infinite carriers


class Carrier:
    """Commutative product on carrier keys, as a finite linear combination."""

    def product(self, k1, k2):
        raise NotImplementedError

    def element_keys(self, elem):
        raise NotImplementedError


class SeqCarrier(Carrier):
    """Pointwise product on N: e_k * e_l = delta_{kl} e_k."""

    name = "finsupp_seq"

    def product(self, k1, k2):
        return [(k1, Fraction(1))] if k1 == k2 else []

    def from_seq(self, s: FinSuppSeq):
        return dict(s.coeffs)


class LaurentCarrier(Carrier):
    """Laurent monomials: t^m * t^n = t^(m+n)."""

    name = "laurent"

    def product(self, k1, k2):
        return [(k1 + k2, Fraction(1))]

    def from_poly(self, p: LaurentPoly):
        return dict(p.coeffs)


def tensor_element(pairs) -> dict:
    """Element of A (x) g from [(carrier_key, lie_index, coeff), ...]."""
    out = {}
    for key, x, c in pairs:
        c = frac(c)
        if c != 0:
            out[(key, x)] = out.get((key, x), Fraction(0)) + c
    return {k: v for k, v in out.items() if v != 0}


def elem_add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        out[k] = out.get(k, Fraction(0)) + c
    return {k: v for k, v in out.items() if v != 0}


def elem_scale(c, u: dict) -> dict:
    c = frac(c)
    return {k: c * v for k, v in u.items() if c * v != 0}


def elem_bracket(carrier: Carrier, g: LieAlgebra, u: dict, v: dict) -> dict:
    """[a (x) x, b (x) y] = ab (x) [x, y], extended bilinearly."""
    out = {}
    for (ka, x), cu in u.items():
        for (kb, y), cv in v.items():
            brk = g.basis_bracket(x, y)
            for key, cp in carrier.product(ka, kb):
                for z, bz in enumerate(brk):
                    if bz != 0:
                        slot = (key, z)
                        out[slot] = (out.get(slot, Fraction(0))
                                     + cu * cv * cp * bz)
    return {k: v for k, v in out.items() if v != 0}


def elem_delta(g: LieAlgebra, y, u: dict) -> dict:
    """delta_y(c (x) x) = c (x) [y, x] on a finitely supported element."""
    out = {}
    for (key, x), c in u.items():
        for z, bz in enumerate(g.bracket(y, unit_vec(g.dim, x))):
            if bz != 0:
                slot = (key, z)
                out[slot] = out.get(slot, Fraction(0)) + c * bz
    return {k: v for k, v in out.items() if v != 0}


def elem_scalar_tensor(avec: dict, y) -> dict:
    """(sum_k a_k e_k) (x) y for a carrier element given as key -> coeff."""
    out = {}
    for key, c in avec.items():
        for x, yx in enumerate(y):
            if c * yx != 0:
                out[(key, x)] = out.get((key, x), Fraction(0)) + c * yx
    return {k: v for k, v in out.items() if v != 0}


def semidirect_bracket(carrier: Carrier, g: LieAlgebra, zy1, zy2):
    """Bracket oracle on (A (x) g) |x g for infinite carriers.

    Arguments are pairs (tensor element dict, g coefficient vector).
    """
    z1, y1 = zy1
    z2, y2 = zy2
    z = elem_bracket(carrier, g, z1, z2)
    z = elem_add(z, elem_delta(g, y1, z2))
    z = elem_add(z, elem_scale(-1, elem_delta(g, y2, z1)))
    return z, g.bracket(y1, y2)
