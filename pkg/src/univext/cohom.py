"""Lie algebra 2-cohomology with trivial coefficients, by exact linear algebra.

Cochains with values in Q^m decompose componentwise, so Z^2, B^2 and H^2 are
computed once for scalar coefficients and expanded; this keeps the row
reductions small.  On top of the raw H^2 machinery this module provides the
universal current-algebra cocycle kappa(x,y) (x) [a d(b)], the neutral-triple
extension of cocycles from A (x) g to the semidirect product (A (x) g) |x g,
and the weak-universality test theta -> [theta . omega].

The extension formula uses omega((f1,y1),(f2,y2)) = omega0(f1,f2)
+ omega0(f1, lam_{f1} (x) y2) - omega0(f2, lam_{f2} (x) y1).  The mixed terms
carry y2 with f1 and y1 with f2; only this indexing is antisymmetric, and
the suites assert both antisymmetry and closedness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .calg import CommAlgebra, kaehler, neutral_triple, omega_mod_dA
from .current import (Carrier, elem_add, elem_bracket, elem_scalar_tensor,
                      semidirect, tensor_algebra, tensor_slot)
from .invforms import UniversalForm, universal_form
from .liealg import LieAlgebra, is_perfect, is_semisimple
from .linalg import (Mat, QuotientSpace, Subspace, kernel, quotient, rank,
                     solve, unit_vec, zeros_vec)


class NotSemisimple(ValueError):
    pass


@dataclass
class Cochain2:
    """Alternating bilinear map on an explicit Lie algebra, values in Q^m.

    values[i][j] holds the target vector at the basis pair (e_i, e_j);
    values[j][i] = -values[i][j] is implied and enforced on construction.
    """

    source: LieAlgebra
    target_dim: int
    values: list  # full n x n table of target vectors

    @classmethod
    def from_pairs(cls, source, target_dim, pair_values) -> "Cochain2":
        """Build from {(i, j): vector} with i < j."""
        n = source.dim
        vals = [[zeros_vec(target_dim) for _ in range(n)] for _ in range(n)]
        for (i, j), v in pair_values.items():
            v = list(v)
            vals[i][j] = v
            vals[j][i] = [-x for x in v]
        return cls(source, target_dim, vals)

    @classmethod
    def zero(cls, source, target_dim) -> "Cochain2":
        return cls.from_pairs(source, target_dim, {})

    @classmethod
    def coboundary(cls, source, eta: Mat) -> "Cochain2":
        """eta . [.,.] for a linear map eta: L -> Q^m (rows = components)."""
        n = source.dim
        pair_values = {(i, j): eta.matvec(source.basis_bracket(i, j))
                       for i in range(n) for j in range(i + 1, n)}
        return cls.from_pairs(source, eta.rows, pair_values)

    def eval(self, u, v):
        out = zeros_vec(self.target_dim)
        n = self.source.dim
        for i in range(n):
            if u[i] == 0:
                continue
            for j in range(n):
                if v[j] == 0 or i == j:
                    continue
                c = u[i] * v[j]
                for t in range(self.target_dim):
                    out[t] += c * self.values[i][j][t]
        return out

    def compose(self, theta: Mat) -> "Cochain2":
        """theta . omega for a linear map theta on the target."""
        n = self.source.dim
        pair_values = {(i, j): theta.matvec(self.values[i][j])
                       for i in range(n) for j in range(i + 1, n)}
        return Cochain2.from_pairs(self.source, theta.rows, pair_values)

    def component(self, t: int):
        """Scalar pair table of the t-th target component."""
        n = self.source.dim
        return {(i, j): self.values[i][j][t]
                for i in range(n) for j in range(i + 1, n)}


def d2(L: LieAlgebra, omega: Cochain2):
    """Chevalley-Eilenberg differential with trivial coefficients.

    Returns {(i, j, k): vector} over i < j < k with
    d(i,j,k) = omega([e_i,e_j], e_k) + omega([e_j,e_k], e_i)
             + omega([e_k,e_i], e_j).
    """
    n = L.dim
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                v = omega.eval(L.basis_bracket(i, j), unit_vec(n, k))
                v = [a + b for a, b in zip(
                    v, omega.eval(L.basis_bracket(j, k), unit_vec(n, i)))]
                v = [a + b for a, b in zip(
                    v, omega.eval(L.basis_bracket(k, i), unit_vec(n, j)))]
                out[(i, j, k)] = v
    return out


def is_cocycle(L: LieAlgebra, omega: Cochain2) -> bool:
    return all(all(x == 0 for x in v) for v in d2(L, omega).values())


class CohomologySpace:
    """Z^2, B^2 and H^2 of an explicit Lie algebra with coefficients Q^m.

    Scalar data is computed once; m-component cochains are handled
    componentwise and their class coordinates interleaved as slot r*m + t.
    """

    def __init__(self, L: LieAlgebra, target_dim: int = 1):
        self.L = L
        self.target_dim = target_dim
        n = L.dim
        self.pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self._pair_index = {p: s for s, p in enumerate(self.pairs)}
        p_count = len(self.pairs)
        # scalar differential matrix, rows = triples, cols = pairs
        rows = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    row = zeros_vec(p_count)
                    for u, vtx in ((L.basis_bracket(i, j), k),
                                   (L.basis_bracket(j, k), i),
                                   (L.basis_bracket(k, i), j)):
                        for (a, b), s in self._pair_index.items():
                            if u[a] != 0 and vtx == b:
                                row[s] += u[a]
                            if u[b] != 0 and vtx == a:
                                row[s] -= u[b]
                    rows.append(row)
        if rows:
            self.z2 = kernel(Mat(rows))
        else:
            self.z2 = Subspace.full(p_count)
        # scalar coboundaries: columns eta = e_l^*
        cob_cols = [[L.basis_bracket(i, j)[l] for (i, j) in self.pairs]
                    for l in range(n)]
        self.b2 = Subspace.span(p_count,
                                cob_cols) if p_count else Subspace.zero(0)
        # B^2 in Z^2-coordinates
        b_in_z = []
        for v in self.b2.basis_vectors():
            coords = self.z2.coordinates(v)
            assert coords is not None, "coboundary outside the cocycle space"
            b_in_z.append(coords)
        self.h2 = quotient(self.z2.dim, Subspace.span(self.z2.dim, b_in_z))

    @property
    def dim_z2(self) -> int:
        return self.z2.dim * self.target_dim

    @property
    def dim_b2(self) -> int:
        return self.b2.dim * self.target_dim

    @property
    def dim_h2(self) -> int:
        return self.h2.dim * self.target_dim

    def _scalar_vector(self, omega: Cochain2, t: int):
        return [omega.values[i][j][t] for (i, j) in self.pairs]

    def cochain_class(self, omega: Cochain2):
        """H^2 coordinates of a cocycle; raises if it is not closed."""
        if omega.source is not self.L and omega.source.dim != self.L.dim:
            raise ValueError("cochain lives on the wrong algebra")
        if omega.target_dim != self.target_dim:
            raise ValueError("target dimension mismatch")
        out = zeros_vec(self.dim_h2)
        for t in range(self.target_dim):
            coords = self.z2.coordinates(self._scalar_vector(omega, t))
            if coords is None:
                raise ValueError("cochain is not a cocycle")
            cls = self.h2.project(coords)
            for r, c in enumerate(cls):
                out[r * self.target_dim + t] = c
        return out

    def is_coboundary(self, omega: Cochain2) -> bool:
        return all(x == 0 for x in self.cochain_class(omega))


def z2_basis_cochains(coh: CohomologySpace) -> list:
    """The scalar Z^2 basis of a cohomology space as Cochain2 objects."""
    out = []
    for v in coh.z2.basis_vectors():
        pair_values = {p: [c] for p, c in zip(coh.pairs, v) if c != 0}
        out.append(Cochain2.from_pairs(coh.L, 1, pair_values))
    return out


# ---------------------------------------------------------------------------
# the universal current-algebra cocycle


def maier_cocycle(g: LieAlgebra, a: CommAlgebra,
                  u: UniversalForm | None = None) -> Cochain2:
    """(a (x) x, b (x) y) -> kappa(x, y) (x) [a d(b)] on A (x) g.

    Target coordinates: slot v*dim(Omega/dA) + w for V_g (x) (Omega(A)/dA).
    """
    if not is_semisimple(g):
        raise NotSemisimple("the fiber algebra must be semisimple")
    if u is None:
        u = universal_form(g)
    k = kaehler(a)
    obar = omega_mod_dA(k)
    t = tensor_algebra(a, g)
    na, ng = a.dim, g.dim
    dim_target = u.dim_v * obar.dim
    pair_values = {}
    for s1 in range(t.dim):
        i, x = divmod(s1, ng)
        for s2 in range(s1 + 1, t.dim):
            j, y = divmod(s2, ng)
            kap = u.kappa_basis(x, y)
            adb = obar.project(k.a_db(unit_vec(na, i), unit_vec(na, j)))
            v = zeros_vec(dim_target)
            for vv, cv in enumerate(kap):
                if cv == 0:
                    continue
                for w, cw in enumerate(adb):
                    if cw != 0:
                        v[vv * obar.dim + w] = cv * cw
            pair_values[(s1, s2)] = v
    return Cochain2.from_pairs(t, dim_target, pair_values)


def laurent_maier_value(u: UniversalForm, m: int, x, n: int, y):
    """omega(t^m (x) x, t^n (x) y) = n delta_{m+n,0} kappa(x, y).

    The residue identification of Laurent 1-forms modulo exact forms:
    res(t^m d(t^n)) = n delta_{m+n,0}.
    """
    if m + n != 0:
        return zeros_vec(u.dim_v)
    return [n * c for c in u.kappa(x, y)]


# ---------------------------------------------------------------------------
# cocycle extension along A (x) g -> (A (x) g) |x g


def default_chooser(a: CommAlgebra):
    """lambda_f from the canonical neutral triple of the A-components of f."""

    def chooser(components):
        elems = [c for c in components if any(x != 0 for x in c)]
        if not elems:
            elems = [zeros_vec(a.dim)]
        lam, _nu, _mu = neutral_triple(a, elems)
        return lam

    return chooser


def extend_cocycle(a: CommAlgebra, g: LieAlgebra, omega0: Cochain2,
                   chooser=None) -> Cochain2:
    """Extend a 2-cocycle on A (x) g to the semidirect product.

    ``chooser`` maps the list of A-components of an element f of A (x) g to
    a lambda in A whose triple is neutral for f; by Lemma-style independence
    the result does not depend on the choice.
    """
    if chooser is None:
        chooser = default_chooser(a)
    t = tensor_algebra(a, g)
    if omega0.source.dim != t.dim:
        raise ValueError("cocycle does not live on A (x) g")
    s = semidirect(a, g)
    na, ng = a.dim, g.dim
    nt = t.dim

    def split(idx):
        """Semidirect basis slot -> (tensor vector, g vector)."""
        if idx < nt:
            return unit_vec(nt, idx), zeros_vec(ng)
        return zeros_vec(nt), unit_vec(ng, idx - nt)

    def components(f):
        """A-components of a tensor vector along the g basis."""
        comps = []
        for x in range(ng):
            comps.append([f[i * ng + x] for i in range(na)])
        return comps

    def lam_tensor(f, y):
        """lambda_f (x) y as a tensor vector."""
        if all(c == 0 for c in f):
            return zeros_vec(nt)
        lam = chooser(components(f))
        out = zeros_vec(nt)
        for i, cl in enumerate(lam):
            if cl == 0:
                continue
            for x, cy in enumerate(y):
                if cy != 0:
                    out[tensor_slot(g, i, x)] += cl * cy
        return out

    pair_values = {}
    for s1 in range(s.dim):
        f1, y1 = split(s1)
        for s2 in range(s1 + 1, s.dim):
            f2, y2 = split(s2)
            v = omega0.eval(f1, f2)
            v = [p + q for p, q in zip(v, omega0.eval(f1,
                                                      lam_tensor(f1, y2)))]
            v = [p - q for p, q in zip(v, omega0.eval(f2,
                                                      lam_tensor(f2, y1)))]
            pair_values[(s1, s2)] = v
    return Cochain2.from_pairs(s, omega0.target_dim, pair_values)


def restrict_cocycle(a: CommAlgebra, g: LieAlgebra,
                     omega: Cochain2) -> Cochain2:
    """Pull back a cochain on (A (x) g) |x g along z -> (z, 0)."""
    nt = a.dim * g.dim
    t = tensor_algebra(a, g)
    pair_values = {(i, j): list(omega.values[i][j])
                   for i in range(nt) for j in range(i + 1, nt)}
    return Cochain2.from_pairs(t, omega.target_dim, pair_values)


def extend_cocycle_fn(carrier: Carrier, g: LieAlgebra, omega0_fn, chooser_fn):
    """Function-form extension for infinite carriers.

    ``omega0_fn`` evaluates a cocycle on pairs of finitely supported tensor
    elements; ``chooser_fn`` maps a tensor element to a carrier element
    lambda (dict key -> coeff) whose triple is neutral for it.  Returns a
    callable on pairs ((z1, y1), (z2, y2)).
    """

    def omega(zy1, zy2):
        z1, y1 = zy1
        z2, y2 = zy2
        val = omega0_fn(z1, z2)
        if z1 and any(c != 0 for c in y2):
            lam1 = elem_scalar_tensor(chooser_fn(z1), y2)
            val = [p + q for p, q in zip(val, omega0_fn(z1, lam1))]
        if z2 and any(c != 0 for c in y1):
            lam2 = elem_scalar_tensor(chooser_fn(z2), y1)
            val = [p - q for p, q in zip(val, omega0_fn(z2, lam2))]
        return val

    return omega


# ---------------------------------------------------------------------------
# weak universality


def delta_w_matrix(L: LieAlgebra, omega: Cochain2, w_dim: int,
                   cohomology: CohomologySpace | None = None) -> Mat:
    """Matrix of theta -> [theta . omega] from Lin(V, W) to H^2(L, W).

    Columns run over the basis theta_{s,t} (V coordinate s to W coordinate
    t), ordered s*w_dim + t; rows are H^2(L, Q^w_dim) coordinates.
    """
    if cohomology is None:
        cohomology = CohomologySpace(L, w_dim)
    dv = omega.target_dim
    cols = []
    for s in range(dv):
        for t in range(w_dim):
            theta = Mat.zeros(w_dim, dv)
            theta.data[t][s] = Fraction(1)
            cols.append(cohomology.cochain_class(omega.compose(theta)))
    if not cols:
        return Mat.zeros(cohomology.dim_h2, 0)
    return Mat.from_cols(cols) if cohomology.dim_h2 \
        else Mat.zeros(0, len(cols))


def delta_w_bijective(L: LieAlgebra, omega: Cochain2, w_dim: int,
                      cohomology: CohomologySpace | None = None) -> bool:
    if cohomology is None:
        cohomology = CohomologySpace(L, w_dim)
    m = delta_w_matrix(L, omega, w_dim, cohomology)
    return (m.cols == cohomology.dim_h2 and rank(m) == cohomology.dim_h2)


def verify_universal(L: LieAlgebra, omega: Cochain2) -> dict:
    """Perfectness plus bijectivity of theta -> [theta . omega] for W = Q
    and W = Q^2; both together certify universality at desk scale."""
    perfect = is_perfect(L)
    report = {"perfect": perfect, "delta_w": {}}
    scalar = CohomologySpace(L, 1)
    for w_dim in (1, 2):
        coh = scalar if w_dim == 1 else CohomologySpace(L, w_dim)
        report["delta_w"][w_dim] = delta_w_bijective(L, omega, w_dim, coh)
    report["universal"] = perfect and all(report["delta_w"].values())
    return report


# ---------------------------------------------------------------------------
# non-coboundary certificates on bracket-oracle algebras


def non_coboundary_certificate(carrier: Carrier, g: LieAlgebra, omega_fn,
                               window, target_dim: int = 1) -> dict:
    """Try to write omega = eta . [.,.] on a finite window of elements.

    ``window`` is a list of finitely supported tensor elements; the unknowns
    are the values of eta on the monomial slots hit by their pairwise
    brackets.  An inconsistent system proves [omega] != 0 and is returned as
    a certificate; a consistent one yields status "unknown".
    """
    brackets = {}
    slots = []
    slot_index = {}
    for p in range(len(window)):
        for q in range(p + 1, len(window)):
            b = elem_bracket(carrier, g, window[p], window[q])
            brackets[(p, q)] = b
            for key in b:
                if key not in slot_index:
                    slot_index[key] = len(slots)
                    slots.append(key)
    for t in range(target_dim):
        rows = []
        rhs = []
        for (p, q), b in brackets.items():
            row = zeros_vec(len(slots))
            for key, c in b.items():
                row[slot_index[key]] = c
            rows.append(row)
            rhs.append(omega_fn(window[p], window[q])[t])
        if rows and solve(Mat(rows), rhs) is None:
            return {"status": "certificate", "component": t,
                    "pairs": len(brackets), "unknowns": len(slots)}
    return {"status": "unknown", "pairs": len(brackets),
            "unknowns": len(slots)}
