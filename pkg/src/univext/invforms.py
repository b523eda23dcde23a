"""Universal invariant symmetric bilinear forms.

For a Lie algebra g the universal form lives on the quotient of the symmetric
square S^2(g) by the span of all [x,y] v z - x v [y,z]; in finite dimension
the span is already closed, so no completion enters.  The induced pairing
kappa(x, y) = [x v y] is symmetric and invariant, and every invariant
symmetric bilinear form factors through it by a unique linear map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (Mat, QuotientSpace, Subspace, kernel, quotient, solve,
                     unit_vec, zeros_vec)
from .liealg import LieAlgebra, LieHom


class NotInvariant(ValueError):
    """The given bilinear form violates beta([x,y],z) = beta(x,[y,z])."""


@dataclass(frozen=True)
class SymSquare:
    """Coordinates for S^2(g): slot index(i, j) for i <= j holds e_i v e_j."""

    algebra: LieAlgebra

    @property
    def dim(self) -> int:
        n = self.algebra.dim
        return n * (n + 1) // 2

    def index(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        n = self.algebra.dim
        # slots for rows 0..i-1, then offset inside row i
        return i * n - i * (i - 1) // 2 + (j - i)

    def pairs(self):
        n = self.algebra.dim
        return [(i, j) for i in range(n) for j in range(i, n)]

    def sym(self, x, y):
        """Coordinates of x v y."""
        n = self.algebra.dim
        out = zeros_vec(self.dim)
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                out[self.index(i, j)] += x[i] * y[j]
        return out


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric bilinear form on g with values in Q^target_dim.

    values[i][j] is the target vector at the basis pair (e_i, e_j).
    """

    target_dim: int
    values: tuple

    @classmethod
    def from_values(cls, target_dim, values) -> "BilinearForm":
        vals = tuple(tuple(tuple(v) for v in row) for row in values)
        n = len(vals)
        for i in range(n):
            for j in range(n):
                if vals[i][j] != vals[j][i]:
                    raise ValueError("form values are not symmetric")
        return cls(target_dim, vals)

    @classmethod
    def from_matrix(cls, m: Mat) -> "BilinearForm":
        """Scalar-valued form from a symmetric matrix."""
        return cls.from_values(1, [[[m[i, j]] for j in range(m.cols)]
                                   for i in range(m.rows)])

    @property
    def dim(self) -> int:
        return len(self.values)

    def eval(self, x, y):
        out = zeros_vec(self.target_dim)
        for i in range(self.dim):
            if x[i] == 0:
                continue
            for j in range(self.dim):
                if y[j] == 0:
                    continue
                c = x[i] * y[j]
                for t in range(self.target_dim):
                    out[t] += c * self.values[i][j][t]
        return out


@dataclass(frozen=True)
class UniversalForm:
    """The pair (V_g, kappa_g) plus the data used to build it."""

    sym: SymSquare
    relations: Subspace
    V: QuotientSpace

    @property
    def algebra(self) -> LieAlgebra:
        return self.sym.algebra

    @property
    def dim_v(self) -> int:
        return self.V.dim

    def kappa(self, x, y):
        """kappa(x, y) in quotient coordinates."""
        return self.V.project(self.sym.sym(x, y))

    def kappa_basis(self, i, j):
        n = self.algebra.dim
        return self.kappa(unit_vec(n, i), unit_vec(n, j))

    def kappa_matrix(self) -> Mat:
        """Columns kappa(e_i, e_j) over all pairs i <= j."""
        return Mat.from_cols([self.kappa_basis(i, j)
                              for (i, j) in self.sym.pairs()])

    def image_spans(self) -> bool:
        """Whether the kappa values on basis pairs span V_g (always true by
        construction; asserted by the suites as the uniqueness certificate)."""
        from .linalg import rank
        if self.dim_v == 0:
            return True
        return rank(self.kappa_matrix()) == self.dim_v


def universal_form(L: LieAlgebra) -> UniversalForm:
    """Build (V_g, kappa_g) by brute-force quotient of the symmetric square."""
    sym = SymSquare(L)
    n = L.dim
    gens = []
    for i in range(n):
        for j in range(n):
            b_ij = L.basis_bracket(i, j)
            for k in range(n):
                ek = unit_vec(n, k)
                rel = sym.sym(b_ij, ek)
                rel = [a - b for a, b in
                       zip(rel, sym.sym(unit_vec(n, i),
                                        L.basis_bracket(j, k)))]
                gens.append(rel)
    relations = Subspace.span(sym.dim, gens)
    return UniversalForm(sym, relations, quotient(sym.dim, relations))


def is_invariant(L: LieAlgebra, beta: BilinearForm) -> bool:
    """beta([x,y],z) = beta(x,[y,z]) on all basis triples."""
    n = L.dim
    for i in range(n):
        for j in range(n):
            b_ij = L.basis_bracket(i, j)
            for k in range(n):
                lhs = beta.eval(b_ij, unit_vec(n, k))
                rhs = beta.eval(unit_vec(n, i), L.basis_bracket(j, k))
                if lhs != rhs:
                    return False
    return True


def factor_form(u: UniversalForm, beta: BilinearForm) -> Mat:
    """The unique psi with psi . kappa = beta, as a target_dim x dim_v matrix.

    Raises NotInvariant when no such map exists (equivalently, when beta
    fails the invariance identity).
    """
    if beta.dim != u.algebra.dim:
        raise ValueError("form lives on the wrong algebra")
    kt = u.kappa_matrix().transpose()  # pairs x dim_v
    rows = []
    for t in range(beta.target_dim):
        target = [beta.values[i][j][t] for (i, j) in u.sym.pairs()]
        row = solve(kt, target)
        if row is None:
            raise NotInvariant("form does not factor through kappa")
        rows.append(row)
    return Mat(rows) if rows else Mat.zeros(0, u.dim_v)


def invariant_forms(L: LieAlgebra) -> list:
    """Basis of the space of scalar invariant symmetric bilinear forms."""
    sym = SymSquare(L)
    n = L.dim
    rows = []
    for i in range(n):
        for j in range(n):
            b_ij = L.basis_bracket(i, j)
            for k in range(n):
                # beta(b_ij, e_k) - beta(e_i, b_jk) = 0 in sym coordinates
                row = sym.sym(b_ij, unit_vec(n, k))
                other = sym.sym(unit_vec(n, i), L.basis_bracket(j, k))
                rows.append([a - b for a, b in zip(row, other)])
    sol = kernel(Mat(rows)) if rows else Subspace.full(sym.dim)
    forms = []
    for v in sol.basis_vectors():
        vals = [[[v[sym.index(i, j)]] for j in range(n)] for i in range(n)]
        forms.append(BilinearForm.from_values(1, vals))
    return forms


def induced_map(f: LieHom, u_dom: UniversalForm, u_cod: UniversalForm) -> Mat:
    """The unique f_kappa with f_kappa(kappa_h(x,y)) = kappa_g(f x, f y)."""
    if u_dom.algebra is not f.domain or u_cod.algebra is not f.codomain:
        raise ValueError("universal forms do not match the homomorphism")
    n = f.domain.dim
    cols = []
    targets = []
    for (i, j) in u_dom.sym.pairs():
        cols.append(u_dom.kappa_basis(i, j))
        targets.append(u_cod.kappa(f.apply(unit_vec(n, i)),
                                   f.apply(unit_vec(n, j))))
    lhs = Mat.from_cols(cols).transpose()  # pairs x dim_dom
    rows = []
    for t in range(u_cod.dim_v):
        row = solve(lhs, [tv[t] for tv in targets])
        if row is None:
            # cannot happen for a genuine homomorphism
            raise RuntimeError("induced map system inconsistent; "
                               "input is not a Lie homomorphism")
        rows.append(row)
    return Mat(rows) if rows else Mat.zeros(0, u_dom.dim_v)


def killing_bilinear(L: LieAlgebra) -> BilinearForm:
    from .liealg import killing_form
    return BilinearForm.from_matrix(killing_form(L))
