"""Commutative associative algebras and their differential calculus.

Three carrier families appear in the suites:

* finite-dimensional algebras by structure constants (pointwise function
  algebras on finite point sets, truncated polynomial rings, ...),
* finitely supported sequences on the natural numbers with pointwise
  product (pseudo-unital, no global unit),
* Laurent polynomials (the algebraic circle).

For unital finite-dimensional algebras the Kaehler differential module is
realised as I/I^2 with I the kernel of the multiplication map A (x) A -> A;
the universal property is then checkable against arbitrary derivations.
For Laurent polynomials the quotient of 1-forms by exact forms is handled in
closed form by the residue functional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import (Mat, QuotientSpace, Subspace, frac, quotient, solve,
                     unit_vec, zeros_vec)


class AlgebraViolation(ValueError):
    def __init__(self, message, indices=None):
        super().__init__(message)
        self.indices = indices


class NotPseudoUnital(ValueError):
    """No neutral element exists for the given element(s)."""


class LeibnizViolation(ValueError):
    """The given map is not a derivation."""


@dataclass
class CommAlgebra:
    """Commutative associative algebra via structure constants m[i][j][k]."""

    dim: int
    m: list  # m[i][j] is the coefficient vector of e_i * e_j
    unit: list | None = None
    name: str = ""

    @classmethod
    def from_products(cls, dim, products, unit=None, name=""):
        """Build from {(i, j): coeff vector} for i <= j (symmetry implied)."""
        m = [[zeros_vec(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in products.items():
            v = [frac(x) for x in v]
            m[i][j] = list(v)
            m[j][i] = list(v)
        return cls(dim, m, [frac(x) for x in unit] if unit else None, name)

    def mul(self, x, y):
        out = zeros_vec(self.dim)
        for i in range(self.dim):
            if x[i] == 0:
                continue
            for j in range(self.dim):
                if y[j] == 0:
                    continue
                c = x[i] * y[j]
                for k, mk in enumerate(self.m[i][j]):
                    if mk != 0:
                        out[k] += c * mk
        return out

    def basis_product(self, i, j):
        return list(self.m[i][j])

    def mult_matrix(self, x) -> Mat:
        """Matrix of multiplication by x on the basis."""
        return Mat.from_cols([self.mul(x, unit_vec(self.dim, j))
                              for j in range(self.dim)])


def validate_alg(a: CommAlgebra) -> None:
    n = a.dim
    for i in range(n):
        for j in range(n):
            if a.m[i][j] != a.m[j][i]:
                raise AlgebraViolation(f"commutativity fails at ({i},{j})",
                                       (i, j))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = a.mul(a.basis_product(i, j), unit_vec(n, k))
                rhs = a.mul(unit_vec(n, i), a.basis_product(j, k))
                if lhs != rhs:
                    raise AlgebraViolation(
                        f"associativity fails at ({i},{j},{k})", (i, j, k))
    if a.unit is not None:
        for i in range(n):
            if a.mul(a.unit, unit_vec(n, i)) != unit_vec(n, i):
                raise AlgebraViolation(f"unit law fails at {i}", (i,))


def functions_on_points(n: int) -> CommAlgebra:
    """Q^n with pointwise product; the unit is the all-ones vector."""
    prods = {(i, i): unit_vec(n, i) for i in range(n)}
    return CommAlgebra.from_products(n, prods, unit=[1] * n,
                                     name=f"functions_on_points({n})")


def truncated_poly(n: int) -> CommAlgebra:
    """Q[t]/t^n with basis 1, t, ..., t^(n-1)."""
    prods = {}
    for i in range(n):
        for j in range(i, n):
            if i + j < n:
                prods[(i, j)] = unit_vec(n, i + j)
    return CommAlgebra.from_products(n, prods, unit=unit_vec(n, 0),
                                     name=f"truncated_poly({n})")


def square_zero_plane() -> CommAlgebra:
    """The 4-dimensional algebra Q{1, x, y, xy} with x^2 = y^2 = 0."""
    prods = {
        (0, 0): unit_vec(4, 0), (0, 1): unit_vec(4, 1),
        (0, 2): unit_vec(4, 2), (0, 3): unit_vec(4, 3),
        (1, 2): unit_vec(4, 3),
    }
    return CommAlgebra.from_products(4, prods, unit=unit_vec(4, 0),
                                     name="square_zero_plane")


def zero_product_line() -> CommAlgebra:
    """Q with the zero product (not pseudo-unital)."""
    return CommAlgebra.from_products(1, {}, name="zero_product_line")


def unitalisation(a: CommAlgebra) -> CommAlgebra:
    """Q (+) A with (lam, a)(mu, b) = (lam mu, lam b + mu a + ab)."""
    n = a.dim
    prods = {}
    prods[(0, 0)] = unit_vec(n + 1, 0)
    for i in range(n):
        prods[(0, i + 1)] = unit_vec(n + 1, i + 1)
        for j in range(i, n):
            prods[(i + 1, j + 1)] = [Fraction(0)] + a.basis_product(i, j)
    name = f"unitalisation({a.name})" if a.name else ""
    return CommAlgebra.from_products(n + 1, prods,
                                     unit=unit_vec(n + 1, 0), name=name)


def neutral_for(a: CommAlgebra, f):
    """A nu with nu * f = f (canonical particular solution), or raise."""
    if a.unit is not None:
        return list(a.unit)
    # (nu * f)_k is linear in nu; columns are e_i * f
    mat = Mat.from_cols([a.mul(unit_vec(a.dim, i), f) for i in range(a.dim)])
    nu = solve(mat, list(f))
    if nu is None:
        raise NotPseudoUnital("no neutral element for the given element")
    return nu


def neutral_triple(a: CommAlgebra, elements):
    """(lam, nu, mu): mu neutral for every listed element, nu for mu, lam
    for nu."""
    if a.unit is not None:
        return list(a.unit), list(a.unit), list(a.unit)
    cols = []
    targets = []
    for f in elements:
        cols.append([a.mul(unit_vec(a.dim, i), f) for i in range(a.dim)])
    mat = Mat([[col[i][k] for i in range(a.dim)]
               for col in cols for k in range(a.dim)])
    target = [x for f in elements for x in f]
    mu = solve(mat, target)
    if mu is None:
        raise NotPseudoUnital("no common neutral element")
    nu = neutral_for(a, mu)
    lam = neutral_for(a, nu)
    return lam, nu, mu


# ---------------------------------------------------------------------------
# finitely supported sequences and Laurent polynomials


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v != 0}


class FinSuppSeq:
    """Finitely supported map N -> Q with pointwise product."""

    def __init__(self, coeffs=None):
        self.coeffs = _clean({int(k): frac(v)
                              for k, v in (coeffs or {}).items()})

    @classmethod
    def indicator(cls, support) -> "FinSuppSeq":
        return cls({k: 1 for k in support})

    def support(self):
        return set(self.coeffs)

    def __mul__(self, other: "FinSuppSeq") -> "FinSuppSeq":
        keys = self.support() & other.support()
        return FinSuppSeq({k: self.coeffs[k] * other.coeffs[k] for k in keys})

    def __add__(self, other: "FinSuppSeq") -> "FinSuppSeq":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return FinSuppSeq(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, FinSuppSeq) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"FinSuppSeq({self.coeffs!r})"

    def is_zero(self) -> bool:
        return not self.coeffs


def seq_neutral(f: FinSuppSeq) -> FinSuppSeq:
    """Canonical neutral element: the indicator of the support."""
    return FinSuppSeq.indicator(f.support())


def seq_neutral_triple(elements):
    """Indicator triple; idempotents are neutral for themselves."""
    supp = set()
    for f in elements:
        supp |= f.support()
    ind = FinSuppSeq.indicator(supp)
    return ind, ind, ind


class LaurentPoly:
    """Q[t, 1/t] with convolution product; keys are integer degrees."""

    def __init__(self, coeffs=None):
        self.coeffs = _clean({int(k): frac(v)
                              for k, v in (coeffs or {}).items()})

    @classmethod
    def monomial(cls, k, c=1) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                out[a + b] = out.get(a + b, Fraction(0)) + ca * cb
        return LaurentPoly(out)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return LaurentPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"

    def derivative(self) -> "LaurentPoly":
        """Formal derivative; the coefficient of t^(k-1) is k a_k."""
        return LaurentPoly({k - 1: k * v for k, v in self.coeffs.items()})

    @classmethod
    def from_json_dict(cls, data) -> "LaurentPoly":
        return cls({int(k): frac(v) for k, v in data["coeffs"].items()})

    def to_json_dict(self) -> dict:
        return {"coeffs": {str(k): str(v) for k, v in
                           sorted(self.coeffs.items())}}


def laurent_residue(one_form: LaurentPoly) -> Fraction:
    """res(sum a_k t^k dt) = a_{-1}.

    This functional vanishes exactly on derivatives d(t^k) = k t^(k-1) dt,
    so it identifies Laurent 1-forms modulo exact forms with Q.
    """
    return one_form.coeffs.get(-1, Fraction(0))


def laurent_a_db(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """The 1-form a * d(b), as the Laurent coefficient of dt."""
    return a * b.derivative()


# ---------------------------------------------------------------------------
# Kaehler differentials of unital finite-dimensional algebras


@dataclass
class KaehlerModule:
    """Omega(A) = I/I^2 for I = ker(A (x) A -> A), with d and the A-action.

    Internal coordinates: I is a subspace of the n^2-dimensional A (x) A
    (slot i*n + j for e_i (x) e_j), elements of Omega are quotient
    coordinates over a basis of I.
    """

    algebra: CommAlgebra
    ideal: Subspace  # I inside A (x) A
    omega: QuotientSpace  # I-coordinates modulo I^2
    d_matrix: Mat  # dim_omega x dim(A), columns d(e_i)
    actions: list  # action of e_i on Omega, as dim_omega matrices

    @property
    def dim(self) -> int:
        return self.omega.dim

    def d(self, a):
        return self.d_matrix.matvec(a)

    def act(self, a, xi):
        """Module action of the algebra element a on xi in Omega."""
        out = zeros_vec(self.dim)
        for i, c in enumerate(a):
            if c != 0:
                out = [x + c * y for x, y in
                       zip(out, self.actions[i].matvec(xi))]
        return out

    def a_db(self, a, b):
        return self.act(a, self.d(b))


def _tensor_mul(a: CommAlgebra, u, v):
    """Product in A (x) A: (x (x) y)(z (x) w) = xz (x) yw."""
    n = a.dim
    out = zeros_vec(n * n)
    for i in range(n):
        for j in range(n):
            cu = u[i * n + j]
            if cu == 0:
                continue
            for k in range(n):
                for l in range(n):
                    cv = v[k * n + l]
                    if cv == 0:
                        continue
                    left = a.basis_product(i, k)
                    right = a.basis_product(j, l)
                    c = cu * cv
                    for p in range(n):
                        if left[p] == 0:
                            continue
                        for q in range(n):
                            if right[q] != 0:
                                out[p * n + q] += c * left[p] * right[q]
    return out


def kaehler(a: CommAlgebra) -> KaehlerModule:
    """Kaehler differential module of a unital algebra, as I/I^2."""
    if a.unit is None:
        raise ValueError("kaehler module requires a unital algebra")
    n = a.dim
    from .linalg import kernel as _kernel
    # multiplication map A (x) A -> A
    mult = Mat.from_cols([a.basis_product(i, j)
                          for i in range(n) for j in range(n)])
    ideal = _kernel(mult)
    ib = ideal.basis_vectors()
    d_i = len(ib)
    # I^2 in I-coordinates
    sq = []
    for u in ib:
        for v in ib:
            coords = ideal.coordinates(_tensor_mul(a, u, v))
            assert coords is not None
            sq.append(coords)
    omega = quotient(d_i, Subspace.span(d_i, sq))

    def to_omega(w):
        coords = ideal.coordinates(w)
        if coords is None:
            raise ValueError("vector is not in the multiplication kernel")
        return omega.project(coords)

    d_cols = []
    for i in range(n):
        # e_i (x) 1 - 1 (x) e_i
        w = zeros_vec(n * n)
        for q, c in enumerate(a.unit):
            if c != 0:
                w[i * n + q] += c
                w[q * n + i] -= c
        d_cols.append(to_omega(w))
    d_matrix = (Mat.from_cols(d_cols) if omega.dim
                else Mat.zeros(0, n))

    # action of e_i: multiply a representative by e_i (x) 1
    actions = []
    for i in range(n):
        ei1 = zeros_vec(n * n)
        for q, c in enumerate(a.unit):
            if c != 0:
                ei1[i * n + q] += c
        cols = []
        for t in range(omega.dim):
            rep_coords = omega.lift(unit_vec(omega.dim, t))
            rep = zeros_vec(n * n)
            for s, c in enumerate(rep_coords):
                if c != 0:
                    rep = [x + c * y for x, y in zip(rep, ib[s])]
            cols.append(to_omega(_tensor_mul(a, ei1, rep)))
        actions.append(Mat.from_cols(cols) if cols
                       else Mat.zeros(omega.dim, 0))
    return KaehlerModule(a, ideal, omega, d_matrix, actions)


def omega_mod_dA(k: KaehlerModule) -> QuotientSpace:
    """Omega(A) modulo the span of all d(e_i)."""
    gens = [k.d(unit_vec(k.algebra.dim, i)) for i in range(k.algebra.dim)]
    return quotient(k.dim, Subspace.span(k.dim, gens))


def check_leibniz(k: KaehlerModule) -> bool:
    n = k.algebra.dim
    for i in range(n):
        for j in range(n):
            ei, ej = unit_vec(n, i), unit_vec(n, j)
            lhs = k.d(k.algebra.mul(ei, ej))
            rhs = [x + y for x, y in zip(k.act(ei, k.d(ej)),
                                         k.act(ej, k.d(ei)))]
            if lhs != rhs:
                return False
    return True


def kaehler_universal_check(k: KaehlerModule, t_matrix: Mat,
                            module_actions: list) -> Mat:
    """The unique module map phi with phi . d = T into the module F.

    ``t_matrix`` is dim(F) x dim(A) (columns T(e_i)); ``module_actions`` give
    the action of each basis element of A on F.  Raises LeibnizViolation if T
    is not a derivation.  Uniqueness holds because d(A) generates Omega(A) as
    an A-module; this is verified and a RuntimeError raised otherwise.
    """
    a = k.algebra
    n = a.dim
    dim_f = t_matrix.rows
    # Leibniz: T(e_i e_j) = e_i . T(e_j) + e_j . T(e_i)
    for i in range(n):
        for j in range(n):
            lhs = t_matrix.matvec(a.basis_product(i, j))
            rhs = [x + y for x, y in zip(
                module_actions[i].matvec(t_matrix.col(j)),
                module_actions[j].matvec(t_matrix.col(i)))]
            if lhs != rhs:
                raise LeibnizViolation(
                    f"T is not a derivation at ({i},{j})")
    if k.dim == 0:
        if not t_matrix.is_zero():
            raise RuntimeError("universal factorization system inconsistent")
        return Mat.zeros(dim_f, 0)
    # phi(e_i . d(e_j)) = e_i . T(e_j); unknowns are the entries of phi
    gen_cols = []
    targets = []
    for i in range(n):
        for j in range(n):
            gen_cols.append(k.act(unit_vec(n, i), k.d(unit_vec(n, j))))
            targets.append(module_actions[i].matvec(t_matrix.col(j)))
    from .linalg import rank
    gens = Mat.from_cols(gen_cols) if gen_cols else Mat.zeros(k.dim, 0)
    if rank(gens) != k.dim:
        raise RuntimeError("d(A) does not generate Omega(A); "
                           "no uniqueness certificate")
    lhs = gens.transpose()
    rows = []
    for t in range(dim_f):
        row = solve(lhs, [tv[t] for tv in targets])
        if row is None:
            raise RuntimeError("universal factorization system inconsistent")
        rows.append(row)
    return Mat(rows) if rows else Mat.zeros(0, k.dim)


# ---------------------------------------------------------------------------
# JSON format (mirrors the Lie structure-constant schema, with "products")


def alg_to_json_dict(a: CommAlgebra) -> dict:
    products = []
    for i in range(a.dim):
        for j in range(i, a.dim):
            coeffs = [[k, str(v)] for k, v in enumerate(a.m[i][j]) if v != 0]
            if coeffs:
                products.append({"i": i, "j": j, "coeffs": coeffs})
    out = {"dim": a.dim, "products": products}
    if a.unit is not None:
        out["unit"] = [str(x) for x in a.unit]
    if a.name:
        out["name"] = a.name
    return out


def alg_from_json_dict(data: dict) -> CommAlgebra:
    dim = int(data["dim"])
    products = {}
    for entry in data.get("products", []):
        i, j = int(entry["i"]), int(entry["j"])
        if not 0 <= i <= j < dim:
            raise ValueError(f"bad product pair ({i},{j})")
        v = zeros_vec(dim)
        for k, val in entry["coeffs"]:
            v[int(k)] = frac(val)
        products[(i, j)] = v
    unit = data.get("unit")
    return CommAlgebra.from_products(dim, products, unit=unit,
                                     name=data.get("name", ""))


def load_alg(path) -> CommAlgebra:
    with open(path) as fh:
        return alg_from_json_dict(json.load(fh))
