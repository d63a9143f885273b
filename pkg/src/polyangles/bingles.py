"""Two-vector angles (bingles) and intermediate-vector constructions.

Reference angles of the Euclidean and pseudo-Euclidean planes come first,
then the H3 bingles: the affine log bingle, the three-parameter nonlinear
family, the two bingles additive over 3-orthogonal intermediates, and the
algebraic coplanarity conditions of the D-shifted family with the conic
surface they produce.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .errors import (
    DegenerateIntermediateError,
    DomainError,
    PoleHitError,
    SectorViolationError,
    SubmanifoldViolationError,
    VanishingInvariantError,
    ZeroScaleError,
    ZeroVectorError,
)
from .invariants import PairInvariants, pair_invariants, ratio
from .metric import (
    EUCLID3,
    MINKOWSKI2,
    QuadraticForm,
    as_vector,
    as_vector3,
    circ,
    qform_dot,
    require_non_isotropic,
)

_TINY = 1e-300

# --------------------------------------------------------------------------
# Euclidean and pseudo-Euclidean reference angles


def _euclid(dim: int) -> QuadraticForm:
    return EUCLID3 if dim == 3 else QuadraticForm.euclidean(dim)


def _norm(q: QuadraticForm, u) -> float:
    n2 = qform_dot(q, u, u)
    if n2 <= 0.0:
        raise ZeroVectorError(f"{u.tolist()} has non-positive square norm {n2}")
    return math.sqrt(n2)


def euclid_phi1(u, v) -> float:
    """Usual unsigned angle arccos(<u, v> / |u||v|)."""
    u, v = as_vector(u), as_vector(v)
    q = _euclid(u.shape[0])
    cos = qform_dot(q, u, v) / (_norm(q, u) * _norm(q, v))
    return math.acos(min(1.0, max(-1.0, cos)))


def euclid_phi2(u, v) -> float:
    """ln(|u| / |v|), antisymmetric and additive for any triple."""
    u, v = as_vector(u), as_vector(v)
    q = _euclid(u.shape[0])
    return math.log(_norm(q, u) / _norm(q, v))


def _timelike(u, v):
    u, v = as_vector(u, 2), as_vector(v, 2)
    if not np.any(u) or not np.any(v):
        raise ZeroVectorError("zero vector")
    nu2, nv2 = qform_dot(MINKOWSKI2, u, u), qform_dot(MINKOWSKI2, v, v)
    if nu2 <= 0.0 or nv2 <= 0.0:
        raise SectorViolationError("both vectors must be timelike")
    return u, v, math.sqrt(nu2), math.sqrt(nv2)


def pseudo_phi1(u, v) -> float:
    """Hyperbolic angle arccosh(eta(u, v) / |u||v|) for signature (+, -)."""
    u, v, nu, nv = _timelike(u, v)
    ch = qform_dot(MINKOWSKI2, u, v) / (nu * nv)
    if ch < 1.0:
        # reversed Cauchy-Schwarz gives ch >= 1 inside one sector; allow rounding
        if ch < 1.0 - 1e-12:
            raise SectorViolationError(f"vectors are not in the same timelike sector (cosh = {ch})")
        ch = 1.0
    return math.acosh(ch)


def pseudo_phi2(u, v) -> float:
    _, _, nu, nv = _timelike(u, v)
    return math.log(nu / nv)


# --------------------------------------------------------------------------
# H3 bingles


def affine_bingle(a, b, A: float = 1.0) -> float:
    """A * ln|w3^{ab}| = A * ln|bm3(b,b,b) / bm3(a,a,a)|.

    The only bingle additive over intermediates in the affine span of (a, b);
    in fact additive for every non-isotropic intermediate.
    """
    require_non_isotropic(b, "b")
    w3 = pair_invariants(a, b).w3
    return A * math.log(abs(w3))


@dataclass(frozen=True)
class FamilyParams:
    A: float
    B: float
    C: float
    D: float = 1.0

    def __post_init__(self):
        if not self.D > 0.0:
            raise ValueError(f"D must be positive, got {self.D}")


def _log_abs(w: float, exponent: float, name: str) -> float:
    if exponent == 0.0:
        return 0.0
    if abs(w) <= _TINY:
        raise VanishingInvariantError(f"{name} vanishes but carries exponent {exponent}")
    return exponent * math.log(abs(w))


def _family_log(w: PairInvariants, p: FamilyParams) -> float:
    return (
        _log_abs(w.w1, p.A, "w1")
        + _log_abs(w.w2, p.B, "w2")
        + _log_abs(w.w3, p.C, "w3")
    )


def family_bingle(a, b, p: FamilyParams) -> float:
    """ln|w1^A w2^B w3^C| - (A + B) ln 3.

    Additive through any intermediate c = s(w) * a (see
    :func:`intermediate_scaling`).  Vanishes for a = b and equals
    (A + 2B + 3C) ln(lambda) for b = lambda * a.
    """
    return _family_log(pair_invariants(a, b), p) - (p.A + p.B) * math.log(3.0)


def nonlinear_bingle(a, b, p: FamilyParams) -> float:
    """ln[w1^A w2^B w3^C] + ln D, the family whose coplanarity conditions are
    given by :func:`pc_coplanarity_residuals`."""
    return _family_log(pair_invariants(a, b), p) + math.log(p.D)


def ortho_log_phi(x: float) -> float:
    """Phi(x) = ln(1 + x/9) - ln 4, solving Phi(x) = Phi(0) + Phi(4x + 27)."""
    arg = 1.0 + x / 9.0
    if not arg > 0.0:
        raise DomainError(f"ln(1 + x/9) undefined for x = {x}")
    return math.log(arg) - math.log(4.0)


def on_w2_submanifold(w: PairInvariants, rtol: float = 1e-9) -> bool:
    return abs(w.w2) <= rtol * max(1.0, w.w1 * w.w1)


def ortho_bingle_log(a, b, rtol: float = 1e-9) -> float:
    """ln(1 + w1^3 / (9 w3)) - ln 4 for pairs with w2^{ab} = 0."""
    w = pair_invariants(a, b)
    if not on_w2_submanifold(w, rtol):
        raise SubmanifoldViolationError(f"w2 = {w.w2} is not zero (w1 = {w.w1})")
    if w.w3 == 0.0:
        raise VanishingInvariantError("w3 vanishes")
    return ortho_log_phi(w.w1**3 / w.w3)


@dataclass(frozen=True)
class MoebiusParams:
    """Coefficients of the linear fractional map x -> (a x + b) / (c x + d)."""

    a: float
    b: float
    c: float
    d: float

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    @property
    def is_degenerate(self) -> bool:
        return self.det == 0.0

    def __call__(self, x: float) -> float:
        return moebius_phi(x, self)


def moebius_phi(x: float, m: MoebiusParams) -> float:
    den = m.c * x + m.d
    if den == 0.0:
        raise PoleHitError(f"c x + d vanishes at x = {x}")
    return (m.a * x + m.b) / den


def ortho_bingle_moebius(a, b, m: MoebiusParams) -> float:
    """(a w1^3 + b w3) / (c w1^3 + d w3), i.e. Phi(x) at x = w1^3 / w3."""
    require_non_isotropic(b, "b")
    w = pair_invariants(a, b)
    cube = w.w1**3
    den = m.c * cube + m.d * w.w3
    if den == 0.0:
        raise PoleHitError("c w1^3 + d w3 vanishes")
    return (m.a * cube + m.b * w.w3) / den


def psi_moebius(x: float, m: MoebiusParams) -> float:
    """Map psi with Phi(psi(x)) = Phi(x) - Phi(0) for Phi the Moebius map `m`.

    psi(x) = d((ad - 2bc) x - bd) / (bc^2 x + ad^2).  When ad - bc = 1 this is
    d((1 - bc) x - bd) / (c(ad - 1) x + ad^2); the general form does not
    depend on how the coefficients are scaled.
    """
    if m.is_degenerate:
        raise DomainError("degenerate linear fractional map (ad - bc = 0)")
    if m.d == 0.0:
        raise PoleHitError("Phi(0) is a pole (d = 0)")
    a, b, c, d = m.a, m.b, m.c, m.d
    den = b * c * c * x + a * d * d
    if den == 0.0:
        raise PoleHitError(f"psi has a pole at x = {x}")
    return d * ((a * d - 2.0 * b * c) * x - b * d) / den


# --------------------------------------------------------------------------
# Intermediate vectors


def intermediate_affine(a, b, alpha1: float, alpha2: float) -> np.ndarray:
    return as_vector3(alpha1 * as_vector3(a) + alpha2 * as_vector3(b))


def intermediate_scaling(a, b, scale: Callable[[float, float, float], float]) -> np.ndarray:
    """c = s(w1, w2, w3) * a with w the pair invariants of (a, b)."""
    w = pair_invariants(a, b)
    s = float(scale(w.w1, w.w2, w.w3))
    if s == 0.0 or not math.isfinite(s):
        raise ZeroScaleError(f"scale function returned {s}")
    return as_vector3(s * as_vector3(a))


def intermediate_orthogonal(a, b, k, rtol: float = 1e-14) -> np.ndarray:
    """c = alpha x (a o b) with alpha_i = k_i / a_i, hence bm3(a, b, c) = 0.

    For k1 = k2 = k3 the result is also Euclid-orthogonal to (1/a1, 1/a2, 1/a3).
    Raises DegenerateIntermediateError if c is zero or isotropic, judged
    relative to |alpha| |a o b|.
    """
    a = require_non_isotropic(a, "a")
    alpha = as_vector3(k) / a
    ab = circ(a, b)
    c = np.cross(alpha, ab)
    scale = float(np.linalg.norm(alpha) * np.linalg.norm(ab))
    small = np.abs(c) <= rtol * scale
    if np.all(small):
        raise DegenerateIntermediateError("3-orthogonal intermediate vanishes")
    if np.any(small):
        raise DegenerateIntermediateError(f"3-orthogonal intermediate {c.tolist()} is isotropic")
    return as_vector3(c)


# --------------------------------------------------------------------------
# Coplanarity conditions of the nonlinear bingle, conic surface, section


def _rpow(base: float, exponent: float, name: str) -> float:
    if exponent == 0.0:
        return 1.0
    if base > 0.0 or (base < 0.0 and float(exponent).is_integer()):
        return base**exponent
    raise DomainError(f"{name} = {base} cannot be raised to the power {exponent}")


def pc_coplanarity_residuals(a, b, c, p: FamilyParams, alpha: float, beta: float,
                             gamma: float, k: float = 0.0) -> tuple[float, float]:
    """Residuals (lhs - rhs) of the two conditions making the nonlinear bingle
    additive through c:

        w1^{ac} w1^{cb} = gamma^B D^(-1/A) w1^(1 - beta B/A) w2^alpha w3^(-k B)
        w2^{ac} w2^{cb} = gamma^(-A) w1^beta w2^(1 - alpha A/B) w3^(k A)

    with w = w^{ab}.  A condition whose leading exponent (A resp. B) is zero
    is void and reported as 0.
    """
    A, B, D = p.A, p.B, p.D
    w_ab = pair_invariants(a, b)
    require_non_isotropic(c, "c")
    w_ac = pair_invariants(a, c)
    w_cb = pair_invariants(c, b)
    r1 = r2 = 0.0
    if A != 0.0:
        rhs = (
            _rpow(gamma, B, "gamma")
            * D ** (-1.0 / A)
            * _rpow(w_ab.w1, 1.0 - beta * B / A, "w1")
            * _rpow(w_ab.w2, alpha, "w2")
            * _rpow(w_ab.w3, -k * B, "w3")
        )
        r1 = w_ac.w1 * w_cb.w1 - rhs
    if B != 0.0:
        rhs = (
            _rpow(gamma, -A, "gamma")
            * _rpow(w_ab.w1, beta, "w1")
            * _rpow(w_ab.w2, 1.0 - alpha * A / B, "w2")
            * _rpow(w_ab.w3, k * A, "w3")
        )
        r2 = w_ac.w2 * w_cb.w2 - rhs
    return r1, r2


def conic_surface_residual(x, xi) -> float:
    """(x1 + x2 + x3)(xi1/x1 + xi2/x2 + xi3/x3) - 3(xi1 + xi2 + xi3), x = c/a."""
    x, xi = as_vector3(x), as_vector3(xi)
    if np.any(x == 0.0):
        raise PoleHitError(f"x = {x.tolist()} has a zero component")
    return float(x.sum() * (xi / x).sum() - 3.0 * xi.sum())


def solve_conic_intermediate(a, b, theta: float) -> np.ndarray:
    """An intermediate c on the conic surface of (a, b), found along a ray.

    In ratio space x = c/a the surface is a cone.  Inside the plane
    x1 + x2 + x3 = 1 the point x0 ~ sqrt(xi) minimises the left-hand side
    (Cauchy-Schwarz), where the residual is <= 0; moving from x0 along the
    in-plane direction of angle `theta` the residual grows without bound as a
    component reaches 0, so a root is bracketed.  Requires positive ratios.
    """
    a = require_non_isotropic(a, "a")
    xi = ratio(a, b)
    if np.any(xi <= 0.0):
        raise DomainError("conic intermediate needs positive ratios b/a")
    s = np.sqrt(xi)
    x0 = s / s.sum()
    e1 = np.array([1.0, -1.0, 0.0]) / math.sqrt(2.0)
    e2 = np.array([1.0, 1.0, -2.0]) / math.sqrt(6.0)
    d = math.cos(theta) * e1 + math.sin(theta) * e2
    neg = d < 0.0
    t_max = float(np.min(x0[neg] / -d[neg]))

    def f(t):
        return conic_surface_residual(x0 + t * d, xi)

    f0 = f(0.0)
    if f0 >= 0.0:
        x = x0
    else:
        hi = t_max * (1.0 - 1e-12)
        while f(hi) <= 0.0:
            hi = 0.5 * (hi + t_max)
        t = brentq(f, 0.0, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)
        x = x0 + t * d
    return as_vector3(x * a)


_T = 1.0 / 3.0


def section_residual(u: float, v: float, xi) -> float:
    """(u+v) xi1/(1/3+u+v) + u xi2/(u-1/3) + v xi3/(v-1/3), the conic surface
    cut by x1 + x2 + x3 = 1 with x1 = 1/3+u+v, x2 = 1/3-u, x3 = 1/3-v."""
    x1, x2, x3 = as_vector3(xi)
    s, pu, pv = _T + u + v, u - _T, v - _T
    if s == 0.0 or pu == 0.0 or pv == 0.0:
        raise PoleHitError(f"(u, v) = ({u}, {v}) lies on an excluded line")
    return (u + v) * x1 / s + u * x2 / pu + v * x3 / pv


def _section_poly(u, v, xi):
    """section_residual with denominators cleared; no poles."""
    x1, x2, x3 = xi
    s, pu, pv = _T + u + v, u - _T, v - _T
    return (u + v) * x1 * pu * pv + u * x2 * s * pv + v * x3 * s * pu


def _section_grad_hess(u, v, xi):
    x1, x2, x3 = xi
    s, pu, pv = _T + u + v, u - _T, v - _T
    gu = x1 * (pu * pv + (u + v) * pv) + x2 * (s * pv + u * pv) + x3 * (v * pu + v * s)
    gv = x1 * (pu * pv + (u + v) * pu) + x2 * (u * pv + u * s) + x3 * (s * pu + v * pu)
    huu = 2.0 * (x1 * pv + x2 * pv + x3 * v)
    hvv = 2.0 * (x1 * pu + x2 * u + x3 * pu)
    huv = x1 * (pu + pv + u + v) + x2 * (pv + s + u) + x3 * (pu + s + v)
    return np.array([gu, gv]), np.array([[huu, huv], [huv, hvv]])


def _bisect_rows(fixed, lo, hi, xi, along_v: bool, iters: int = 80):
    """Vectorised bisection of the section polynomial on brackets [lo, hi]."""
    def f(t):
        return _section_poly(fixed, t, xi) if along_v else _section_poly(t, fixed, xi)

    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        left = np.sign(fm) == np.sign(flo)
        lo = np.where(left, mid, lo)
        flo = np.where(left, fm, flo)
        hi = np.where(left, hi, mid)
    return 0.5 * (lo + hi)


def _round_sig(x, digits):
    if digits is None:
        return x
    return np.array([float(f"{t:.{digits}g}") for t in np.ravel(x)]).reshape(np.shape(x))


def fig1_section(xi, grid: int = 800, bounds: tuple[float, float] = (-1.0, 1.0),
                 tol: float = 1e-10, digits: int | None = 12) -> np.ndarray:
    """Points (u, v) of the plane section of the conic coplanarity surface.

    The section polynomial is sampled on a ``grid x grid`` lattice over
    ``bounds``^2.  Roots are bracketed by sign changes along rows (u fixed)
    and then columns (v fixed) and refined by bisection; isolated real points
    of the curve, which produce no sign change, are picked up by a Newton
    search for critical points started from local minima of |P|.  Points are
    rounded to `digits` significant digits, and only points whose rational
    section residual is within `tol` at the rounded coordinates are kept.
    Returns an (m, 2) array in deterministic row-major order.
    """
    xi = tuple(float(t) for t in as_vector3(xi))
    g = np.linspace(bounds[0], bounds[1], grid)
    U, V = np.meshgrid(g, g, indexing="ij")
    P = _section_poly(U, V, xi)

    found = []
    for along_v in (True, False):
        Pm = P if along_v else P.T
        sign = np.sign(Pm)
        i, j = np.nonzero(sign[:, :-1] * sign[:, 1:] < 0)
        if i.size:
            t = _bisect_rows(g[i], g[j], g[j + 1], xi, along_v)
            pts = np.column_stack([g[i], t]) if along_v else np.column_stack([t, g[i]])
            found.append(pts)
        zi, zj = np.nonzero(Pm == 0.0)
        if zi.size:
            pts = np.column_stack([g[zi], g[zj]]) if along_v else np.column_stack([g[zj], g[zi]])
            found.append(pts)
    found.append(_isolated_points(P, g, xi))

    pts = np.vstack(found) if found else np.empty((0, 2))
    pts = _round_sig(pts, digits)
    keep, seen = [], set()
    for u, v in pts:
        key = (u, v)
        if key in seen:
            continue
        seen.add(key)
        try:
            r = section_residual(u, v, xi)
        except PoleHitError:
            continue
        if abs(r) <= tol:
            keep.append(key)
    return np.array(keep, dtype=float).reshape(-1, 2)


def _isolated_points(P, g, xi, max_iter: int = 50) -> np.ndarray:
    absP = np.abs(P)
    inner = absP[1:-1, 1:-1]
    is_min = np.ones_like(inner, dtype=bool)
    no_change = np.ones_like(inner, dtype=bool)
    s0 = np.sign(P[1:-1, 1:-1])
    n = P.shape[0]
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == dj == 0:
                continue
            nb = absP[1 + di:n - 1 + di, 1 + dj:n - 1 + dj]
            is_min &= inner <= nb
            no_change &= np.sign(P[1 + di:n - 1 + di, 1 + dj:n - 1 + dj]) == s0
    ci, cj = np.nonzero(is_min & no_change)
    out = []
    lo, hi = g[0], g[-1]
    for i, j in zip(ci + 1, cj + 1):
        z = np.array([g[i], g[j]])
        for _ in range(max_iter):
            grad, hess = _section_grad_hess(z[0], z[1], xi)
            try:
                step = np.linalg.solve(hess, grad)
            except np.linalg.LinAlgError:
                break
            z = z - step
            if np.max(np.abs(step)) <= 1e-15 * max(1.0, np.max(np.abs(z))):
                break
        if lo <= z[0] <= hi and lo <= z[1] <= hi and np.all(np.isfinite(z)):
            out.append(z)
    return np.array(out, dtype=float).reshape(-1, 2)
