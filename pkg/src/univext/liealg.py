"""Finite-dimensional Lie algebras over Q given by structure constants.

Basis conventions used by the catalog (all golden values in the test suites
refer to these):

* ``sl2``: basis (e, f, h) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
* ``sl3``: the eight elementary/traceless matrices
  E12, E13, E21, E23, E31, E32, H1 = E11-E22, H2 = E22-E33.
* ``so3``: basis (x, y, z) with [x,y] = z, [y,z] = x, [z,x] = y.
* ``heisenberg3``: basis (x, y, z) with [x,y] = z central.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import (Mat, Subspace, frac, kernel, unit_vec, zeros_vec)


class ValidationError(ValueError):
    """Antisymmetry or Jacobi failure; carries the offending index triple."""

    def __init__(self, message, indices=None):
        super().__init__(message)
        self.indices = indices


@dataclass
class LieAlgebra:
    """Lie algebra via structure constants c[i][j][k]: [e_i,e_j] = sum c e_k."""

    dim: int
    c: list  # c[i][j] is the coefficient vector of [e_i, e_j]
    name: str = ""

    @classmethod
    def from_brackets(cls, dim, brackets, name=""):
        """Build from a dict {(i, j): coeff vector} for i < j; the rest by
        antisymmetry."""
        c = [[zeros_vec(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in brackets.items():
            v = [frac(x) for x in v]
            c[i][j] = v
            c[j][i] = [-x for x in v]
        return cls(dim, c, name)

    def bracket(self, x, y):
        """Bilinear extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch")
        out = zeros_vec(self.dim)
        for i in range(self.dim):
            if x[i] == 0:
                continue
            for j in range(self.dim):
                if y[j] == 0:
                    continue
                coeff = x[i] * y[j]
                for k, ck in enumerate(self.c[i][j]):
                    if ck != 0:
                        out[k] += coeff * ck
        return out

    def basis_bracket(self, i, j):
        return list(self.c[i][j])

    def ad(self, x) -> Mat:
        """Matrix of ad(x) = [x, -] on the basis."""
        return Mat.from_cols([self.bracket(x, unit_vec(self.dim, j))
                              for j in range(self.dim)])

    def basis(self):
        return [unit_vec(self.dim, i) for i in range(self.dim)]


def validate(L: LieAlgebra) -> None:
    """Check antisymmetry and the Jacobi identity on all basis triples.

    Raises ValidationError identifying the first failing triple.
    """
    n = L.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if L.c[i][j][k] != -L.c[j][i][k]:
                    raise ValidationError(
                        f"antisymmetry fails at ({i},{j},{k})", (i, j, k))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = (unit_vec(n, i), unit_vec(n, j), unit_vec(n, k))
                s = L.bracket(L.bracket(ei, ej), ek)
                s = [a + b for a, b in
                     zip(s, L.bracket(L.bracket(ej, ek), ei))]
                s = [a + b for a, b in
                     zip(s, L.bracket(L.bracket(ek, ei), ej))]
                if any(x != 0 for x in s):
                    raise ValidationError(
                        f"Jacobi fails at ({i},{j},{k})", (i, j, k))


def is_valid(L: LieAlgebra) -> bool:
    try:
        validate(L)
    except ValidationError:
        return False
    return True


def killing_form(L: LieAlgebra) -> Mat:
    """K[i][j] = trace(ad e_i . ad e_j)."""
    n = L.dim
    ads = [L.ad(unit_vec(n, i)) for i in range(n)]
    k = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            prod = ads[i] * ads[j]
            tr = sum((prod[t, t] for t in range(n)), Fraction(0))
            k[i][j] = tr
            k[j][i] = tr
    return Mat(k)


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    """Span of all basis brackets [e_i, e_j]."""
    gens = [L.basis_bracket(i, j)
            for i in range(L.dim) for j in range(i + 1, L.dim)]
    return Subspace.span(L.dim, gens)


def is_perfect(L: LieAlgebra) -> bool:
    return derived_subalgebra(L).dim == L.dim


def is_semisimple(L: LieAlgebra) -> bool:
    """Cartan's criterion in characteristic 0: Killing form nondegenerate."""
    if L.dim == 0:
        return True
    return killing_form(L).det() != 0


def centroid(L: LieAlgebra) -> Subspace:
    """Solution space of f([e_i,e_j]) = [f(e_i), e_j] inside Q^(n*n).

    Matrices are flattened row major: entry (r, c) sits at slot r*n + c.
    """
    n = L.dim
    if n == 0:
        return Subspace.zero(0)
    rows = []
    for i in range(n):
        for j in range(n):
            b = L.basis_bracket(i, j)
            adj = L.ad(unit_vec(n, j))
            for r in range(n):
                # row of the constraint, coefficient of F[r2][c2]
                row = zeros_vec(n * n)
                # (F b)_r = sum_c F[r][c] b[c]
                for cc in range(n):
                    row[r * n + cc] += b[cc]
                # [F e_i, e_j]_r = -(ad e_j . F e_i)_r = -sum_c adj[r][c] F[c][i]
                for cc in range(n):
                    row[cc * n + i] -= -adj[r, cc]
                rows.append(row)
    return kernel(Mat(rows))


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    brackets = {}
    for i in range(n1):
        for j in range(i + 1, n1):
            brackets[(i, j)] = L1.basis_bracket(i, j) + zeros_vec(n2)
    for i in range(n2):
        for j in range(i + 1, n2):
            brackets[(n1 + i, n1 + j)] = (zeros_vec(n1)
                                          + L2.basis_bracket(i, j))
    name = ""
    if L1.name and L2.name:
        name = f"{L1.name}+{L2.name}"
    return LieAlgebra.from_brackets(n, brackets, name)


@dataclass
class LieHom:
    """Lie algebra homomorphism as a codomain_dim x domain_dim matrix."""

    domain: LieAlgebra
    codomain: LieAlgebra
    matrix: Mat

    def __post_init__(self):
        if (self.matrix.rows != self.codomain.dim
                or self.matrix.cols != self.domain.dim):
            raise ValueError("homomorphism matrix has wrong shape")

    def apply(self, x):
        return self.matrix.matvec(x)

    def is_hom(self) -> bool:
        n = self.domain.dim
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.apply(self.domain.basis_bracket(i, j))
                rhs = self.codomain.bracket(self.apply(unit_vec(n, i)),
                                            self.apply(unit_vec(n, j)))
                if lhs != rhs:
                    return False
        return True

    def compose(self, other: "LieHom") -> "LieHom":
        """self after other."""
        if other.codomain is not self.domain:
            raise ValueError("homs are not composable")
        return LieHom(other.domain, self.codomain, self.matrix * other.matrix)


# ---------------------------------------------------------------------------
# catalog


def _sl2() -> LieAlgebra:
    # basis e, f, h
    return LieAlgebra.from_brackets(3, {
        (0, 1): [0, 0, 1],    # [e,f] = h
        (0, 2): [-2, 0, 0],   # [e,h] = -2e
        (1, 2): [0, 2, 0],    # [f,h] = 2f
    }, "sl2")


def _gl_matrix_algebra(mats, name) -> LieAlgebra:
    """Structure constants from explicit matrices, solving for coordinates."""
    n = len(mats)
    flat = Mat.from_cols([[m[i, j] for i in range(m.rows)
                           for j in range(m.cols)] for m in mats])
    brackets = {}
    from .linalg import solve
    for a in range(n):
        for b in range(a + 1, n):
            comm = mats[a] * mats[b] - mats[b] * mats[a]
            target = [comm[i, j] for i in range(comm.rows)
                      for j in range(comm.cols)]
            coords = solve(flat, target)
            if coords is None:
                raise ValueError("commutator escapes the span")
            brackets[(a, b)] = coords
    return LieAlgebra.from_brackets(n, brackets, name)


def _sl3() -> LieAlgebra:
    def e(i, j):
        m = [[0] * 3 for _ in range(3)]
        m[i][j] = 1
        return Mat(m)

    mats = [e(0, 1), e(0, 2), e(1, 0), e(1, 2), e(2, 0), e(2, 1),
            e(0, 0) - e(1, 1), e(1, 1) - e(2, 2)]
    return _gl_matrix_algebra(mats, "sl3")


def _so3() -> LieAlgebra:
    return LieAlgebra.from_brackets(3, {
        (0, 1): [0, 0, 1],
        (1, 2): [1, 0, 0],
        (0, 2): [0, -1, 0],   # [z,x] = y
    }, "so3")


def _heisenberg3() -> LieAlgebra:
    return LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1]}, "heisenberg3")


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.from_brackets(n, {}, f"abelian({n})")


_ABELIAN_RE = re.compile(r"^abelian\((\d+)\)$")


def catalog(name: str) -> LieAlgebra:
    """Named test algebras; see the module docstring for basis conventions."""
    m = _ABELIAN_RE.match(name)
    if m:
        return abelian(int(m.group(1)))
    try:
        return {
            "sl2": _sl2,
            "sl3": _sl3,
            "so3": _so3,
            "heisenberg3": _heisenberg3,
            "sl2_plus_sl2": lambda: direct_sum(_sl2(), _sl2()),
        }[name]()
    except KeyError:
        raise KeyError(f"unknown catalog algebra {name!r}") from None


CATALOG_NAMES = ("sl2", "sl3", "so3", "heisenberg3", "abelian(1)",
                 "abelian(2)", "abelian(4)", "sl2_plus_sl2")


# ---------------------------------------------------------------------------
# JSON structure-constant format
#
# {"dim": n, "brackets": [{"i": 0, "j": 1, "coeffs": [[k, "p/q"], ...]}, ...]}
# Only pairs with i < j are listed; antisymmetry is implied; unlisted pairs
# are zero.


def to_json_dict(L: LieAlgebra) -> dict:
    brackets = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            coeffs = [[k, str(v)] for k, v in enumerate(L.c[i][j]) if v != 0]
            if coeffs:
                brackets.append({"i": i, "j": j, "coeffs": coeffs})
    out = {"dim": L.dim, "brackets": brackets}
    if L.name:
        out["name"] = L.name
    return out


def from_json_dict(data: dict) -> LieAlgebra:
    dim = int(data["dim"])
    brackets = {}
    for entry in data.get("brackets", []):
        i, j = int(entry["i"]), int(entry["j"])
        if not 0 <= i < j < dim:
            raise ValueError(f"bad bracket pair ({i},{j})")
        v = zeros_vec(dim)
        for k, val in entry["coeffs"]:
            v[int(k)] = frac(val)
        brackets[(i, j)] = v
    return LieAlgebra.from_brackets(dim, brackets, data.get("name", ""))


def load(path) -> LieAlgebra:
    with open(path) as fh:
        return from_json_dict(json.load(fh))
