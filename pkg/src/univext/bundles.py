"""Lie-algebra bundles over discrete bases.

A bundle is given by a finite base, a finite cover by charts, a fiber
Lie algebra g and, for each chart pair and overlap point, a Lie
automorphism of g translating chart-j coordinates into chart-i
coordinates.  Sections have finite support and are stored in a designated
default chart per point (the lowest cover index containing it).

The base is a plain index set: the smooth structure of the original
setting degenerates completely, every function is smooth, and what is
left is exactly the algebraic universality content — the fiberwise
universal bundle V(K), the pointwise form kappa_K, and the
partition-of-unity gluing algorithm that factors any invariant form
through kappa_K.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .invforms import (BilinearForm, NotInvariant, UniversalForm,
                       factor_form, induced_map, universal_form)
from .liealg import LieAlgebra, LieHom, direct_sum
from .linalg import Mat, frac, rank, unit_vec, zeros_vec


class InvalidAutomorphism(ValueError):
    pass


class SpanFailure(ValueError):
    """kappa_K does not span the V-sections; uniqueness is not certified."""


def is_lie_automorphism(g: LieAlgebra, m: Mat) -> bool:
    if m.rows != g.dim or m.cols != g.dim or m.det() == 0:
        return False
    return LieHom(g, g, m).is_hom()


@dataclass
class DiscreteBundle:
    """Lie-algebra bundle with discrete base and Aut(g) transition data.

    transitions maps (i, j, p) to the matrix taking chart-j coordinates
    to chart-i coordinates at the overlap point p.  Only one direction
    per pair needs to be supplied; inverses and identities are filled in
    by `make_bundle`.
    """

    fiber: LieAlgebra
    base: tuple
    cover: tuple
    transitions: dict

    def charts_at(self, p):
        return [i for i, u in enumerate(self.cover) if p in u]

    def default_chart(self, p):
        for i, u in enumerate(self.cover):
            if p in u:
                return i
        raise ValueError(f"point {p} not covered")

    def transition(self, i: int, j: int, p) -> Mat:
        """Chart-j coordinates -> chart-i coordinates at p."""
        if i == j:
            return Mat.identity(self.fiber.dim)
        return self.transitions[(i, j, p)]


def make_bundle(fiber: LieAlgebra, base, cover, transitions) -> DiscreteBundle:
    """Normalise and validate bundle data.

    Checks that the cover exhausts the base, that every supplied
    transition is a Lie automorphism, and the cocycle condition on
    triple overlaps.  Missing inverse transitions are filled in.
    """
    base = tuple(base)
    cover = tuple(tuple(u) for u in cover)
    covered = {p for u in cover for p in u}
    if set(base) != covered:
        raise ValueError("cover does not match the base")
    trans = {}
    for (i, j, p), m in transitions.items():
        if p not in cover[i] or p not in cover[j]:
            raise ValueError(f"transition at {p} outside overlap {(i, j)}")
        if not is_lie_automorphism(fiber, m):
            raise InvalidAutomorphism(f"transition {(i, j, p)}")
        trans[(i, j, p)] = m
    for (i, j, p), m in list(trans.items()):
        if (j, i, p) not in trans:
            trans[(j, i, p)] = m.inverse()
    nch = len(cover)
    for p in base:
        charts = [i for i in range(nch) if p in cover[i]]
        for i in charts:
            for j in charts:
                if i != j and (i, j, p) not in trans:
                    raise ValueError(f"missing transition {(i, j, p)}")
        for i in charts:
            for j in charts:
                for k in charts:
                    if len({i, j, k}) < 3:
                        continue
                    lhs = trans[(i, k, p)]
                    rhs = trans[(i, j, p)] * trans[(j, k, p)]
                    if lhs.data != rhs.data:
                        raise ValueError(
                            f"cocycle condition fails at {(i, j, k, p)}")
    return DiscreteBundle(fiber, base, cover, trans)


def trivial_bundle(g: LieAlgebra, n: int) -> DiscreteBundle:
    return make_bundle(g, range(n), [tuple(range(n))], {})


def make_twisted_bundle(g: LieAlgebra, n: int, sigma: Mat) -> DiscreteBundle:
    """Bundle over Z/n with two charts and monodromy sigma.

    Charts U_0 = {0..m} and U_1 = {m..n-1, 0} overlap in {m, 0}; the
    transition is the identity at m and sigma at 0, so a loop around the
    base picks up sigma.
    """
    if n < 2:
        raise ValueError("need at least two points")
    if not is_lie_automorphism(g, sigma):
        raise InvalidAutomorphism("sigma is not a Lie automorphism")
    m = n // 2
    u0 = tuple(range(m + 1))
    u1 = tuple(range(m, n)) + (0,)
    transitions = {
        (0, 1, m): Mat.identity(g.dim),
        (0, 1, 0): sigma,
    }
    return make_bundle(g, range(n), [u0, u1], transitions)


def negative_transpose_sl3() -> Mat:
    """The outer automorphism X -> -X^T of sl3 in the catalog basis."""
    # basis order: E12, E13, E21, E23, E31, E32, H1, H2
    m = Mat.zeros(8, 8)
    for a, b in [(0, 2), (1, 4), (3, 5)]:
        m.data[a][b] = Fraction(-1)
        m.data[b][a] = Fraction(-1)
    m.data[6][6] = Fraction(-1)
    m.data[7][7] = Fraction(-1)
    return m


def exp_ad_nilpotent(g: LieAlgebra, x) -> Mat:
    """exp(ad x) for ad-nilpotent x (inner automorphism)."""
    n = g.dim
    a = g.ad(x)
    out = Mat.identity(n)
    term = Mat.identity(n)
    for k in range(1, n + 1):
        term = a * term
        if all(c == 0 for row in term.data for c in row):
            break
        fk = Fraction(1)
        for s in range(2, k + 1):
            fk *= s
        out = Mat([[out[r, c] + term[r, c] / fk for c in range(n)]
                   for r in range(n)])
    else:
        raise ValueError("ad x is not nilpotent")
    return out


# ---------------------------------------------------------------------------
# sections


def section(pairs, fiber_dim: int) -> dict:
    """Finite-support section from [(point, coefficient vector), ...]."""
    out = {}
    for p, v in pairs:
        v = [frac(x) for x in v]
        if len(v) != fiber_dim:
            raise ValueError("fiber dimension mismatch")
        if p in out:
            out[p] = [a + b for a, b in zip(out[p], v)]
        else:
            out[p] = v
    return {p: v for p, v in out.items() if any(c != 0 for c in v)}


def delta_section(p, v) -> dict:
    return section([(p, v)], len(v))


def section_add(x: dict, y: dict) -> dict:
    out = {p: list(v) for p, v in x.items()}
    for p, v in y.items():
        if p in out:
            out[p] = [a + b for a, b in zip(out[p], v)]
        else:
            out[p] = list(v)
    return {p: v for p, v in out.items() if any(c != 0 for c in v)}


def section_scale(c, x: dict) -> dict:
    c = frac(c)
    return {p: [c * a for a in v] for p, v in x.items() if c != 0}


def section_bracket(b: DiscreteBundle, x: dict, y: dict) -> dict:
    """Pointwise fiber bracket; sections share the default chart."""
    out = {}
    for p, xv in x.items():
        if p in y:
            v = b.fiber.bracket(xv, y[p])
            if any(c != 0 for c in v):
                out[p] = v
    return out


def transport(b: DiscreteBundle, p, i: int, v):
    """Default-chart coordinates of a fiber vector -> chart-i coordinates."""
    return b.transition(i, b.default_chart(p), p).matvec(v)


def section_algebra(b: DiscreteBundle) -> LieAlgebra:
    """The section Lie algebra, one fiber copy per base point."""
    out = None
    for _ in b.base:
        out = b.fiber if out is None else direct_sum(out, b.fiber)
    out.name = f"sections({b.fiber.name or 'g'}^{len(b.base)})"
    return out


def section_to_vec(b: DiscreteBundle, x: dict):
    n = b.fiber.dim
    v = zeros_vec(len(b.base) * n)
    idx = {p: k for k, p in enumerate(b.base)}
    for p, xv in x.items():
        for a, c in enumerate(xv):
            v[idx[p] * n + a] = c
    return v


# ---------------------------------------------------------------------------
# the V(K) bundle and kappa_K


@dataclass
class VBundle:
    """Fiberwise universal-form bundle: fibers V(g), induced transitions."""

    bundle: DiscreteBundle
    u: UniversalForm
    transitions: dict = field(default_factory=dict)

    def transition(self, i: int, j: int, p) -> Mat:
        if i == j:
            return Mat.identity(self.u.dim_v)
        key = (i, j, p)
        if key not in self.transitions:
            tau = self.bundle.transition(i, j, p)
            self.transitions[key] = induced_map(
                LieHom(self.bundle.fiber, self.bundle.fiber, tau),
                self.u, self.u)
        return self.transitions[key]


def v_bundle(b: DiscreteBundle, u: UniversalForm) -> VBundle:
    vb = VBundle(b, u)
    for (i, j, p) in b.transitions:
        vb.transition(i, j, p)
    # cocycle condition is inherited from the base bundle; verify anyway
    nch = len(b.cover)
    for p in b.base:
        charts = [i for i in range(nch) if p in b.cover[i]]
        for i in charts:
            for j in charts:
                for k in charts:
                    if len({i, j, k}) < 3:
                        continue
                    lhs = vb.transition(i, k, p)
                    rhs = vb.transition(i, j, p) * vb.transition(j, k, p)
                    if lhs.data != rhs.data:
                        raise RuntimeError("induced cocycle condition fails")
    return vb


def kappa_k(b: DiscreteBundle, u: UniversalForm, x: dict, y: dict) -> dict:
    """Pointwise universal form: kappa_K(X,Y)(p) = kappa(X(p), Y(p)).

    The result is a V-section in default-chart coordinates.
    """
    out = {}
    for p, xv in x.items():
        if p in y:
            v = u.kappa(xv, y[p])
            if any(c != 0 for c in v):
                out[p] = v
    return out


def v_section_to_vec(b: DiscreteBundle, u: UniversalForm, w: dict):
    dv = u.dim_v
    v = zeros_vec(len(b.base) * dv)
    idx = {p: k for k, p in enumerate(b.base)}
    for p, wv in w.items():
        for a, c in enumerate(wv):
            v[idx[p] * dv + a] = c
    return v


def span_check(b: DiscreteBundle, u: UniversalForm) -> bool:
    """Does the image of kappa_K span the finite-support V-sections?

    Sections of the form [X,Y] generate the section algebra when the
    fiber is perfect, and all generators are supported at single points,
    so the check reduces to a single fiber: the values
    kappa([e_x, e_y], e_z) must span V(g).
    """
    g, n = b.fiber, b.fiber.dim
    cols = []
    for x in range(n):
        for y in range(x + 1, n):
            bxy = g.basis_bracket(x, y)
            for z in range(n):
                cols.append(u.kappa(bxy, unit_vec(n, z)))
    return rank(Mat.from_cols(cols)) == u.dim_v


# ---------------------------------------------------------------------------
# partition of unity and gluing


@dataclass
class PartitionOfUnity:
    """Nonnegative weights rho_i per chart, summing to 1 at every point."""

    bundle: DiscreteBundle
    weights: tuple  # one dict point -> Fraction per chart

    def __post_init__(self):
        b = self.bundle
        self.weights = tuple({p: frac(c) for p, c in w.items() if frac(c) != 0}
                             for w in self.weights)
        if len(self.weights) != len(b.cover):
            raise ValueError("one weight function per chart required")
        for i, w in enumerate(self.weights):
            for p, c in w.items():
                if p not in b.cover[i]:
                    raise ValueError(f"rho_{i} supported outside U_{i}")
                if c < 0:
                    raise ValueError("negative weight")
        for p in b.base:
            if sum(w.get(p, Fraction(0)) for w in self.weights) != 1:
                raise ValueError(f"weights do not sum to 1 at {p}")


def subordinate_partition(b: DiscreteBundle) -> PartitionOfUnity:
    """The default partition: full weight on the default chart."""
    weights = [dict() for _ in b.cover]
    for p in b.base:
        weights[b.default_chart(p)][p] = Fraction(1)
    return PartitionOfUnity(b, tuple(weights))


def check_invariant_section_form(b: DiscreteBundle, gamma: BilinearForm):
    """Validate symmetry and invariance of a form on the section algebra.

    Uses the block structure: brackets of sections live pointwise, so
    only same-point bracket triples constrain gamma.
    """
    g, n = b.fiber, b.fiber.dim
    nn = len(b.base) * n
    if gamma.dim != nn:
        raise ValueError("form lives on the wrong section algebra")
    for a in range(nn):
        for c in range(a, nn):
            if gamma.values[a][c] != gamma.values[c][a]:
                raise NotInvariant("form is not symmetric")
    d = gamma.target_dim
    for k, _ in enumerate(b.base):
        off = k * n
        for x in range(n):
            for y in range(n):
                bxy = g.basis_bracket(x, y)
                for c in range(nn):
                    lhs = [sum(bxy[z] * gamma.values[off + z][c][t]
                               for z in range(n) if bxy[z] != 0)
                           for t in range(d)]
                    if c // n == k:
                        byz = g.basis_bracket(y, c - off)
                        rhs = [sum(byz[z] * gamma.values[off + x][off + z][t]
                                   for z in range(n) if byz[z] != 0)
                               for t in range(d)]
                    else:
                        rhs = [Fraction(0)] * d
                    if lhs != rhs:
                        raise NotInvariant("form is not invariant")


def factor_invariant_form(b: DiscreteBundle, u: UniversalForm,
                          gamma: BilinearForm,
                          rho: PartitionOfUnity = None) -> Mat:
    """Factor an invariant symmetric form on sections through kappa_K.

    Returns the matrix of beta: V-sections -> Q^d with
    beta(kappa_K(X, Y)) = gamma(X, Y).  Per chart and point, the diagonal
    block of gamma is pulled back to chart coordinates and factored
    through kappa of the fiber; the local answers are glued with the
    partition weights (with indicator cutoffs, which are exact in the
    discrete model).  Uniqueness is certified by span_check.
    """
    if not span_check(b, u):
        raise SpanFailure("kappa_K does not span; no uniqueness certificate")
    check_invariant_section_form(b, gamma)
    if rho is None:
        rho = subordinate_partition(b)
    g, n, dv = b.fiber, b.fiber.dim, u.dim_v
    d = gamma.target_dim
    beta = Mat.zeros(d, len(b.base) * dv)
    for k, p in enumerate(b.base):
        dch = b.default_chart(p)
        for i, w in enumerate(rho.weights):
            r = w.get(p, Fraction(0))
            if r == 0:
                continue
            tau = b.transition(dch, i, p)  # chart i -> default chart
            # gamma's block at p, pulled back to chart-i coordinates
            block = [[None] * n for _ in range(n)]
            for x in range(n):
                tx = tau.col(x)
                for y in range(n):
                    ty = tau.col(y)
                    block[x][y] = [
                        sum(tx[a] * ty[bb] * gamma.values[k * n + a][
                            k * n + bb][t]
                            for a in range(n) if tx[a] != 0
                            for bb in range(n) if ty[bb] != 0)
                        for t in range(d)]
            psi = factor_form(u, BilinearForm.from_values(d, block))
            # express beta on default-chart V coordinates
            tk = induced_map(LieHom(g, g, b.transition(i, dch, p)), u, u)
            local = psi * tk
            for t in range(d):
                for a in range(dv):
                    beta.data[t][k * dv + a] += r * local[t, a]
    return beta


def apply_v_form(b: DiscreteBundle, u: UniversalForm, beta: Mat, w: dict):
    return beta.matvec(v_section_to_vec(b, u, w))


def gamma_from_v_form(b: DiscreteBundle, u: UniversalForm,
                      psi: Mat) -> BilinearForm:
    """The section form psi . kappa_K, as a BilinearForm (always invariant)."""
    g, n = b.fiber, b.fiber.dim
    nn = len(b.base) * n
    values = [[None] * nn for _ in range(nn)]
    for a in range(nn):
        k, x = divmod(a, n)
        xs = delta_section(b.base[k], unit_vec(n, x))
        for c in range(nn):
            l, y = divmod(c, n)
            ys = delta_section(b.base[l], unit_vec(n, y))
            values[a][c] = apply_v_form(b, u, psi, kappa_k(b, u, xs, ys))
    return BilinearForm.from_values(psi.rows, values)


# ---------------------------------------------------------------------------
# JSON fixtures


def bundle_to_json_dict(b: DiscreteBundle) -> dict:
    from .liealg import to_json_dict
    return {
        "base": list(b.base),
        "cover": [list(u) for u in b.cover],
        "fiber": (b.fiber.name if b.fiber.name else to_json_dict(b.fiber)),
        "transitions": [
            {"i": i, "j": j, "p": p,
             "matrix": [[str(c) for c in row] for row in m.data]}
            for (i, j, p), m in sorted(b.transitions.items())
        ],
    }


def bundle_from_json_dict(d: dict) -> DiscreteBundle:
    from .liealg import catalog, from_json_dict
    fiber = d["fiber"]
    if isinstance(fiber, str):
        g = catalog(fiber)
    else:
        g = from_json_dict(fiber)
    transitions = {}
    for t in d["transitions"]:
        key = (t["i"], t["j"], t["p"])
        transitions[key] = Mat([[frac(c) for c in row]
                                for row in t["matrix"]])
    return make_bundle(g, d["base"], d["cover"], transitions)


def load_bundle(path: str) -> DiscreteBundle:
    with open(path) as f:
        return bundle_from_json_dict(json.load(f))
