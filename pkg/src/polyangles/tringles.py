"""Three-vector angles (tringles) and the cubic-root reconstruction of ratio
triples from the quadruple invariant table."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

import numpy as np

from .errors import (
    DegenerateInvariantError,
    DomainError,
    NonRealRootsError,
    UnsupportedError,
)
from .invariants import QuadInvariantTable, pair_invariants, w4_from_ratios
from .metric import require_non_isotropic


def tringle_AB(a, b, c, A: float, B: float) -> float:
    """ln((w3^{ab})^A (w3^{ac})^B), with |.| taken on negative w3 values."""
    require_non_isotropic(b, "b")
    require_non_isotropic(c, "c")
    w_ab = pair_invariants(a, b).w3
    w_ac = pair_invariants(a, c).w3
    if w_ab == 0.0 or w_ac == 0.0:
        raise DomainError("w3 vanishes")
    return A * math.log(abs(w_ab)) + B * math.log(abs(w_ac))


TringleFn = Callable[[object, object, object], float]


def tringle_additivity_residual(phi: TringleFn, a, b, c, d, variant: int) -> float:
    """phi(a, b, c) minus the right-hand side of additivity variant 1, 2 or 4.

    1: phi(d,b,c) + phi(a,d,c) + phi(a,b,d)
    2: phi(a,b,d) + phi(b,c,d) + phi(c,a,d)
    4: phi(a,d,d) + phi(d,b,d) + phi(d,d,c)
    """
    if variant == 1:
        rhs = phi(d, b, c) + phi(a, d, c) + phi(a, b, d)
    elif variant == 2:
        rhs = phi(a, b, d) + phi(b, c, d) + phi(c, a, d)
    elif variant == 4:
        rhs = phi(a, d, d) + phi(d, b, d) + phi(d, d, c)
    elif variant == 3:
        raise UnsupportedError("the signed-permutation variant has no settled sign convention")
    else:
        raise ValueError(f"unknown additivity variant {variant!r}")
    return phi(a, b, c) - rhs


@dataclass(frozen=True)
class CubicCoeffs:
    """Monic cubic t^3 + c2 t^2 + c1 t + c0."""

    c2: float
    c1: float
    c0: float

    @classmethod
    def from_roots(cls, roots) -> "CubicCoeffs":
        r1, r2, r3 = roots
        return cls(-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3))

    @property
    def discriminant(self) -> float:
        b, c, d = self.c2, self.c1, self.c0
        return 18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d

    def __call__(self, t: float) -> float:
        return ((t + self.c2) * t + self.c1) * t + self.c0


@dataclass(frozen=True)
class RootTriple:
    roots: tuple[float, float, float]

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(sorted(float(r) for r in self.roots)))

    def __iter__(self):
        return iter(self.roots)

    def as_array(self) -> np.ndarray:
        return np.array(self.roots)


def _polish(c: CubicCoeffs, t: float, steps: int = 3) -> float:
    # Newton steps, kept only while they reduce |f|
    ft = abs(c(t))
    for _ in range(steps):
        df = (3 * t + 2 * c.c2) * t + c.c1
        if df == 0.0:
            break
        tn = t - c(t) / df
        fn = abs(c(tn))
        if not fn < ft:
            break
        t, ft = tn, fn
    return t


def solve_cubic_real(c: CubicCoeffs, tol: float | None = None) -> RootTriple:
    """Three real roots of a monic cubic by the trigonometric method.

    `tol` bounds how negative the discriminant may be before the cubic is
    declared to have complex roots; the default is 1e-10 * max(1, |c|^2).
    """
    if tol is None:
        tol = 1e-10 * max(1.0, c.c2**2 + c.c1**2 + c.c0**2)
    if c.discriminant < -tol:
        raise NonRealRootsError(f"{c} has a complex-conjugate root pair")
    shift = -c.c2 / 3.0
    p = c.c1 - c.c2 * c.c2 / 3.0
    q = 2.0 * c.c2**3 / 27.0 - c.c2 * c.c1 / 3.0 + c.c0
    if p >= 0.0:
        # within tolerance of a triple root
        y = -math.copysign(abs(q) ** (1.0 / 3.0), q)
        roots = [y + shift] * 3
    else:
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        theta = math.acos(min(1.0, max(-1.0, arg))) / 3.0
        roots = [m * math.cos(theta - 2.0 * math.pi * k / 3.0) + shift for k in range(3)]
    return RootTriple(tuple(_polish(c, r) for r in roots))


def _ratio(num: float, den: float, label: str) -> float:
    if den == 0.0 or not math.isfinite(num / den):
        raise DegenerateInvariantError(f"{label} vanishes")
    return num / den


def ratio_cubics(t: QuadInvariantTable) -> tuple[CubicCoeffs, CubicCoeffs, CubicCoeffs]:
    """The three monic cubics whose roots are xi = b/a, eta = c/a, delta = d/a.

    Each cubic is t^3 - e1 t^2 + e2 t - e3 with, e.g. for xi,
    e1 = 3 w2^{ba} w4^{abd} / w4^{bad}, e2 = 3 w2^{ab}, e3 = w3^{ab}.
    """
    v = t.values
    xi = CubicCoeffs(
        -3.0 * v["w2_ba"] * _ratio(v["w4_abd"], v["w4_bad"], "w4_bad"),
        3.0 * v["w2_ab"],
        -v["w3_ab"],
    )
    eta = CubicCoeffs(
        -3.0 * v["w2_ca"] * _ratio(v["w4_acd"], v["w4_cad"], "w4_cad"),
        3.0 * v["w2_ac"],
        -v["w3_ac"],
    )
    dl = CubicCoeffs(
        -3.0 * v["w2_da"] * _ratio(v["w4_acd"], v["w4_dca"], "w4_dca"),
        3.0 * v["w2_ad"],
        -v["w3_ad"],
    )
    return xi, eta, dl


def reconstruct_ratio_triples(t: QuadInvariantTable, tol: float | None = None):
    """Recover the multisets xi, eta, delta from table invariants only."""
    return tuple(solve_cubic_real(c, tol) for c in ratio_cubics(t))


def w4_pairings(xi, eta) -> list[float]:
    """w4 for each of the 6 ways of aligning `eta` against `xi`."""
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    return [w4_from_ratios(xi, eta[list(perm)]) for perm in permutations(range(3))]


def generalized_tringle_w4(t: QuadInvariantTable, tol: float | None = None,
                           merge_rtol: float = 1e-12) -> tuple[float, ...]:
    """Candidate values of w4^{abc} rebuilt from reconstructed roots.

    Root order is lost by the cubics, so every relative alignment of the xi
    and eta roots is evaluated; the result is the sorted set of distinct
    values (values within `merge_rtol` of each other are merged).
    """
    xi, eta, _ = reconstruct_ratio_triples(t, tol)
    vals = sorted(w4_pairings(xi.roots, eta.roots))
    out: list[float] = []
    for x in vals:
        if out and abs(x - out[-1]) <= merge_rtol * max(1.0, abs(x)):
            continue
        out.append(x)
    return tuple(out)
