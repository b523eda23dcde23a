"""Dense exact linear algebra over the rationals.

Matrices are small (everything in the test suites stays well under dimension
200), so plain Gauss-Jordan elimination with ``fractions.Fraction`` entries is
adequate.  Subspaces are stored with their basis in canonical reduced row
echelon form, which makes subspace equality representational equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def frac(x) -> Fraction:
    """Coerce ints, strings like ``"2/3"`` and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(xs) -> list:
    return [frac(x) for x in xs]


def zeros_vec(n: int) -> list:
    return [Fraction(0)] * n


def unit_vec(n: int, i: int) -> list:
    v = zeros_vec(n)
    v[i] = Fraction(1)
    return v


def add_vec(u, v):
    return [a + b for a, b in zip(u, v, strict=True)]


def sub_vec(u, v):
    return [a - b for a, b in zip(u, v, strict=True)]


def scale_vec(c, v):
    c = frac(c)
    return [c * a for a in v]


def is_zero_vec(v) -> bool:
    return all(a == 0 for a in v)


class Mat:
    """Dense rational matrix, row major."""

    def __init__(self, rows):
        self.data = [[frac(x) for x in row] for row in rows]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([unit_vec(n, i) for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        m = cls([[0] * cols for _ in range(rows)])
        m.cols = cols  # keep the column count on empty matrices
        return m

    @classmethod
    def from_cols(cls, cols) -> "Mat":
        return cls(cols).transpose()

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def transpose(self) -> "Mat":
        return Mat([[self.data[i][j] for i in range(self.rows)]
                    for j in range(self.cols)])

    def matvec(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((self.data[i][j] * v[j] for j in range(self.cols)),
                    Fraction(0))
                for i in range(self.rows)]

    def __mul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ot = other.transpose()
        return Mat([[sum((a * b for a, b in zip(row, col)), Fraction(0))
                     for col in ot.data] for row in self.data])

    def __add__(self, other: "Mat") -> "Mat":
        return Mat([add_vec(r, s) for r, s in zip(self.data, other.data,
                                                  strict=True)])

    def __sub__(self, other: "Mat") -> "Mat":
        return Mat([sub_vec(r, s) for r, s in zip(self.data, other.data,
                                                  strict=True)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def __repr__(self):
        return f"Mat({self.data!r})"

    def is_zero(self) -> bool:
        return all(is_zero_vec(r) for r in self.data)

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("det of non-square matrix")
        a = [list(r) for r in self.data]
        n = self.rows
        det = Fraction(1)
        for j in range(n):
            piv = next((i for i in range(j, n) if a[i][j] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != j:
                a[j], a[piv] = a[piv], a[j]
                det = -det
            det *= a[j][j]
            inv = 1 / a[j][j]
            for i in range(j + 1, n):
                if a[i][j] != 0:
                    c = a[i][j] * inv
                    for k in range(j, n):
                        a[i][k] -= c * a[j][k]
        return det

    def inverse(self) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = Mat([self.row(i) + unit_vec(n, i) for i in range(n)])
        red, pivots = rref(aug)
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Mat([red.row(i)[n:] for i in range(n)])


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Canonical reduced row echelon form and its pivot columns.

    The row space is preserved; zero rows sink to the bottom.
    """
    a = [list(r) for r in m.data]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for j in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][j] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][j]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][j] != 0:
                c = a[i][j]
                a[i] = [x - c * y for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
        if r == nrows:
            break
    return Mat(a), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n with canonical RREF basis rows."""

    ambient_dim: int
    basis: Mat  # rows are the basis vectors, in RREF, no zero rows

    @classmethod
    def span(cls, ambient_dim: int, vectors) -> "Subspace":
        vectors = [v for v in vectors if not is_zero_vec(v)]
        if not vectors:
            return cls.zero(ambient_dim)
        red, pivots = rref(Mat(vectors))
        return cls(ambient_dim, Mat([red.row(i) for i in range(len(pivots))]))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Mat.zeros(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Mat.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def contains(self, v) -> bool:
        return self.coordinates(v) is not None

    def coordinates(self, v):
        """Coefficients of v over the basis rows, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        red, pivots = rref(self.basis)
        residual = list(v)
        coeffs = []
        for i, p in enumerate(pivots):
            c = residual[p]
            coeffs.append(c)
            if c != 0:
                residual = sub_vec(residual, scale_vec(c, red.row(i)))
        if not is_zero_vec(residual):
            return None
        return coeffs

    def basis_vectors(self):
        return [self.basis.row(i) for i in range(self.basis.rows)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)


def kernel(m: Mat) -> Subspace:
    """Null space of m; dim = cols - rank."""
    red, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for f in free:
        v = zeros_vec(m.cols)
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        basis.append(v)
    return Subspace.span(m.cols, basis)


def row_space(m: Mat) -> Subspace:
    return Subspace.span(m.cols, [m.row(i) for i in range(m.rows)])


def column_space(m: Mat) -> Subspace:
    return row_space(m.transpose())


def solve(m: Mat, b):
    """One particular solution of m x = b (free variables 0), or None."""
    if len(b) != m.rows:
        raise ValueError("dimension mismatch")
    aug = Mat([m.row(i) + [b[i]] for i in range(m.rows)])
    red, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = zeros_vec(m.cols)
    for i, p in enumerate(pivots):
        x[p] = red[i, m.cols]
    return x


@dataclass(frozen=True)
class QuotientSpace:
    """Q^n modulo a subspace, with an explicit projection/section pair.

    ``proj`` maps ambient coordinates to quotient coordinates; the rows of
    ``section`` are coset representatives (ambient vectors) of the quotient
    basis, chosen as the standard basis vectors at the non-pivot columns of
    the denominator's RREF.
    """

    ambient_dim: int
    denominator: Subspace
    section: Mat  # dim x ambient_dim, rows are coset representatives
    proj: Mat  # dim x ambient_dim

    @property
    def dim(self) -> int:
        return self.section.rows

    def project(self, v):
        return self.proj.matvec(v)

    def lift(self, q):
        """Ambient representative of quotient coordinates q."""
        return self.section.transpose().matvec(q)


def quotient(ambient_dim: int, w: Subspace) -> QuotientSpace:
    """Quotient of Q^ambient_dim by the subspace w."""
    if w.ambient_dim != ambient_dim:
        raise ValueError("ambient dimension mismatch")
    red, pivots = rref(w.basis)
    free = [j for j in range(ambient_dim) if j not in pivots]
    section = Mat([unit_vec(ambient_dim, f) for f in free]) \
        if free else Mat.zeros(0, ambient_dim)
    # project(v): eliminate the pivot coordinates with the RREF rows, then
    # read off the free coordinates.
    proj_rows = []
    for f in free:
        row = zeros_vec(ambient_dim)
        row[f] = Fraction(1)
        for i, p in enumerate(pivots):
            row[p] = -red[i, f]
        proj_rows.append(row)
    proj = Mat(proj_rows) if free else Mat.zeros(0, ambient_dim)
    return QuotientSpace(ambient_dim, w, section, proj)
