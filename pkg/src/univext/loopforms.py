"""Connection-and-forms pipeline on the algebraic circle.

Elements of the loop algebra Q[t,1/t] (x) g are finitely supported maps
degree -> g-coefficient vector; 1-forms carry an implicit dt and are stored
the same way (coefficient of t^k dt at key k).  The Lie connection D is the
formal derivative, kappa-tilde pairs a g-valued 1-form with a loop element
coefficientwise through kappa_g, and the induced cocycle is the residue of
kappa_tilde(D eta, zeta).

Sign convention (frozen from the first oracle run): with arguments in the
order (eta, zeta),

    omega(t^m (x) x, t^n (x) y) = m delta_{m+n,0} kappa(x, y),

which is minus the residue-identified current-algebra cocycle
kappa(x,y) (x) [t^m d(t^n)] = n delta_{m+n,0} kappa(x,y).  The global sign
is recorded by identify_with_maier.
"""

from __future__ import annotations

from fractions import Fraction

from .calg import LaurentPoly
from .invforms import UniversalForm
from .liealg import LieAlgebra
from .linalg import frac, zeros_vec


def _clean(coeffs: dict) -> dict:
    return {k: v for k, v in coeffs.items()
            if any(c != 0 for c in v)}


def loop_element(pairs, fiber_dim: int) -> dict:
    """Element from [(degree, coefficient vector), ...]; summed per degree."""
    out = {}
    for deg, v in pairs:
        v = [frac(x) for x in v]
        if deg in out:
            out[deg] = [a + b for a, b in zip(out[deg], v)]
        else:
            out[deg] = list(v)
        if len(v) != fiber_dim:
            raise ValueError("fiber dimension mismatch")
    return _clean(out)


def loop_monomial(deg: int, v) -> dict:
    return _clean({deg: [frac(x) for x in v]})


def loop_add(u: dict, v: dict) -> dict:
    out = {k: list(vv) for k, vv in u.items()}
    for k, vv in v.items():
        if k in out:
            out[k] = [a + b for a, b in zip(out[k], vv)]
        else:
            out[k] = list(vv)
    return _clean(out)


def loop_scale(c, u: dict) -> dict:
    c = frac(c)
    return _clean({k: [c * x for x in v] for k, v in u.items()})


def loop_scalar_mul(p: LaurentPoly, u: dict) -> dict:
    """Multiply by a Laurent polynomial (the function-module structure)."""
    out = {}
    for d, c in p.coeffs.items():
        out = loop_add(out, loop_scale(c, {k + d: v for k, v in u.items()}))
    return out


def loop_bracket(g: LieAlgebra, u: dict, v: dict) -> dict:
    """[t^m (x) x, t^n (x) y] = t^(m+n) (x) [x, y]."""
    out = {}
    for m, xv in u.items():
        for n, yv in v.items():
            b = g.bracket(xv, yv)
            if any(c != 0 for c in b):
                out = loop_add(out, {m + n: b})
    return out


def connection_D(eta: dict) -> dict:
    """Formal derivative: t^k (x) x -> k t^(k-1) dt (x) x."""
    return _clean({k - 1: [k * c for c in v] for k, v in eta.items()})


def kappa_tilde(u: UniversalForm, omega: dict, eta: dict) -> dict:
    """Coefficientwise convolution pairing through kappa_g.

    omega is a g-valued 1-form, eta a loop element; the result is a
    V_g-valued 1-form.
    """
    out = {}
    for m, xv in omega.items():
        for n, yv in eta.items():
            kap = u.kappa(xv, yv)
            if any(c != 0 for c in kap):
                out = loop_add(out, {m + n: kap})
    return out


def beta_form(u: UniversalForm, zeta: dict, eta: dict) -> dict:
    """kappa_tilde(D zeta, eta) + kappa_tilde(zeta, D eta); symmetric and
    invariant."""
    left = kappa_tilde(u, connection_D(zeta), eta)
    # the pairing is symmetric in which slot carries the form
    right = kappa_tilde(u, connection_D(eta), zeta)
    return loop_add(left, right)


def koszul_d(phi: dict) -> dict:
    """Formal derivative on V_g-valued loop functions."""
    return _clean({k - 1: [k * c for c in v] for k, v in phi.items()})


def kappa_loop(u: UniversalForm, xi: dict, zeta: dict) -> dict:
    """Pointwise kappa of two loop elements (a V_g-valued loop function)."""
    out = {}
    for m, xv in xi.items():
        for n, yv in zeta.items():
            kap = u.kappa(xv, yv)
            if any(c != 0 for c in kap):
                out = loop_add(out, {m + n: kap})
    return out


def residue(one_form: dict, fiber_dim: int):
    """Coefficient of t^(-1) dt; kills exact forms."""
    return list(one_form.get(-1, zeros_vec(fiber_dim)))


def omega_cocycle(u: UniversalForm, eta: dict, zeta: dict):
    """Residue class of kappa_tilde(D eta, zeta) in V_g coordinates."""
    return residue(kappa_tilde(u, connection_D(eta), zeta), u.dim_v)


def identify_with_maier(u: UniversalForm, window: int = 3) -> dict:
    """Compare the connection cocycle with the residue-identified
    current-algebra cocycle on all monomial pairs in the degree window.

    Returns {"match": bool, "sign": s} where s is the single global sign
    with omega_connection = s * omega_maier on the window.
    """
    from .cohom import laurent_maier_value
    g = u.algebra
    n = g.dim
    sign = None
    for m in range(-window, window + 1):
        for x in range(n):
            xv = [Fraction(1) if i == x else Fraction(0) for i in range(n)]
            for k in range(-window, window + 1):
                for y in range(n):
                    yv = [Fraction(1) if i == y else Fraction(0)
                          for i in range(n)]
                    ours = omega_cocycle(u, loop_monomial(m, xv),
                                         loop_monomial(k, yv))
                    theirs = laurent_maier_value(u, m, xv, k, yv)
                    if all(c == 0 for c in ours) \
                            and all(c == 0 for c in theirs):
                        continue
                    if sign is None:
                        for s in (1, -1):
                            if ours == [s * c for c in theirs]:
                                sign = s
                                break
                        if sign is None:
                            return {"match": False, "sign": None}
                    elif ours != [sign * c for c in theirs]:
                        return {"match": False, "sign": sign}
    return {"match": True, "sign": sign if sign is not None else 1}
