"""Seeded residual scans of the additivity equations and invariant identities.

Sample ``i`` of equation ``E`` under seed ``s`` draws from a Philox generator
keyed by ``(crc32(E), s)`` with counter ``i << 128``, so every sample is
reproducible on its own and a scan gives the same report however it is split
across workers.  Samples that fall outside an equation's domain are redrawn
from the same stream and counted as rejections.
"""
from __future__ import annotations

import math
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from . import bingles as bg
from . import hyper, invariants as inv, tringles as tr
from .errors import PolyAngleError, UnknownEquationError


class EquationId(str, Enum):
    FUND1 = "FUND1"
    EQ3_LOG = "EQ3_LOG"
    EQ6_ARC = "EQ6_ARC"
    ADD21_AFFINE = "ADD21_AFFINE"
    FAMILY_SCALING = "FAMILY_SCALING"
    ADDFIN_SYM = "ADDFIN_SYM"
    ADDFIN3_W2ZERO = "ADDFIN3_W2ZERO"
    ADDFIN3_MOEBIUS = "ADDFIN3_MOEBIUS"
    EXP_ADDITIVITY = "EXP_ADDITIVITY"
    TRINGLE_V4 = "TRINGLE_V4"
    PC_PROP5 = "PC_PROP5"
    NABLA_IDENTITY = "NABLA_IDENTITY"
    QUAD_TABLE_IDENTITIES = "QUAD_TABLE_IDENTITIES"
    ROUNDTRIP_CUBIC = "ROUNDTRIP_CUBIC"


@dataclass(frozen=True)
class SamplerConfig:
    """Magnitude range of sampled components and parameters (log-uniform)."""

    low: float = 0.1
    high: float = 10.0


class Reject(Exception):
    """Raised by a sampler when a draw falls outside the equation's domain."""


@dataclass(frozen=True)
class Failure:
    index: int
    inputs: dict
    residual: float


@dataclass
class VerificationReport:
    equation: EquationId
    seed: int
    samples: int
    tolerance: float
    max_abs_residual: float
    max_rel_residual: float
    rejections: int
    failure_count: int
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_dict(self, include_elapsed: bool = True) -> dict:
        d = {
            "equation": self.equation.value,
            "seed": self.seed,
            "samples": self.samples,
            "tolerance": self.tolerance,
            "max_abs_residual": self.max_abs_residual,
            "max_rel_residual": self.max_rel_residual,
            "rejections": self.rejections,
            "failure_count": self.failure_count,
            "failures": [asdict(f) for f in self.failures],
            "passed": self.passed,
        }
        if include_elapsed:
            d["elapsed"] = self.elapsed
        return d

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.equation.value:<22} seed={self.seed} n={self.samples} "
            f"max_abs={self.max_abs_residual:.3e} max_rel={self.max_rel_residual:.3e} "
            f"tol={self.tolerance:.0e} rejected={self.rejections} ({self.elapsed:.2f}s)"
        )


# --------------------------------------------------------------------------
# Sampling helpers


def _logu(rng, cfg: SamplerConfig, size=None):
    return np.exp(rng.uniform(math.log(cfg.low), math.log(cfg.high), size))


def _signed(rng, cfg, size=None):
    sign = np.where(rng.random(size) < 0.5, -1.0, 1.0)
    return sign * _logu(rng, cfg, size)


def _pos3(rng, cfg):
    return _logu(rng, cfg, 3)


def _signed3(rng, cfg):
    return _signed(rng, cfg, 3)


def _floats(x):
    return [float(t) for t in np.ravel(x)]


def _mixed(abs_res: float, *terms: float) -> float:
    """Residual relative to the largest term magnitude, floored at 1."""
    return abs_res / max(1.0, *(abs(t) for t in terms))


def _sum_cond(values) -> float:
    s = abs(sum(values))
    return math.inf if s == 0.0 else sum(abs(v) for v in values) / s


# --------------------------------------------------------------------------
# Checks.  Each returns (inputs, abs residual, relative residual).


def _fund1(rng, cfg):
    xi = float(_logu(rng, cfg))
    eta = float(_signed(rng, cfg))
    a1, a2 = _logu(rng, cfg, 2)

    def f(w1, w2):
        return math.acos(min(1.0, math.sqrt(w1 * w2)))

    x = a1 + a2 * xi
    q = x * x + (a2 * eta) ** 2
    r = xi * xi + eta * eta
    m = x * xi + a2 * eta * eta
    lhs = f(xi, xi / r)
    t1 = f(x, x / q)
    t2 = f(m / q, m / r)
    res = abs(lhs - t1 - t2)
    return {"xi": xi, "eta": eta, "alpha1": float(a1), "alpha2": float(a2)}, res, _mixed(res, lhs, t1, t2)


def _eq3_log(rng, cfg):
    xi, x = _logu(rng, cfg, 2)
    c1 = float(rng.uniform(-5.0, 5.0))
    lhs, t1, t2 = c1 * math.log(xi), c1 * math.log(x), c1 * math.log(xi / x)
    res = abs(lhs - t1 - t2)
    return {"xi": float(xi), "x": float(x), "C1": c1}, res, _mixed(res, lhs, t1, t2)


def _eq6_arc(rng, cfg):
    u, v = rng.random(2)
    if not (0.0 < u <= v < 1.0):
        raise Reject
    amp = float(rng.uniform(-5.0, 5.0))

    def psi(t):
        return amp * math.acos(min(1.0, math.sqrt(t)))

    zeta = math.sqrt((v - 1.0) * (u - 1.0)) + math.sqrt(u * v)
    if zeta > 1.0 + 1e-15:
        raise Reject
    lhs, t1, t2 = psi(u), psi(v), psi(zeta * zeta)
    res = abs(lhs - t1 - t2)
    return {"u": float(u), "v": float(v), "A": amp}, res, _mixed(res, lhs, t1, t2)


def _add21(rng, cfg):
    a, b = _signed3(rng, cfg), _signed3(rng, cfg)
    al1, al2 = float(_signed(rng, cfg)), float(_signed(rng, cfg))
    amp = float(rng.uniform(-5.0, 5.0))
    c = bg.intermediate_affine(a, b, al1, al2)
    if np.any(np.abs(c) < 1e-3 * (abs(al1) * np.abs(a) + abs(al2) * np.abs(b))):
        raise Reject  # c close to isotropic: ill-conditioned
    w1, w2, w3 = inv.pair_invariants(a, b).as_tuple()
    dlt = al1**3 + al2**3 * w3 + al1**2 * al2 * w1 + al1 * al2**2 * w2

    def f(_w1, _w2, _w3):
        return amp * math.log(abs(_w3))

    arg_ac = (3 * al1 + al2 * w1, 3 * al1**2 + al2**2 * w2 + 2 * al1 * al2 * w1, dlt)
    arg_cb = ((al1**2 * w1 + 3 * al2**2 * w3 + 2 * al1 * al2 * w2) / dlt,
              (al1 * w2 + 3 * al2 * w3) / dlt, w3 / dlt)
    lhs, t1, t2 = f(w1, w2, w3), f(*arg_ac), f(*arg_cb)
    res_eq = abs(lhs - t1 - t2)
    # the same additivity through the actual intermediate vector
    d0 = bg.affine_bingle(a, b, amp)
    d1 = bg.affine_bingle(a, c, amp)
    d2 = bg.affine_bingle(c, b, amp)
    res_vec = abs(d0 - d1 - d2)
    rel = max(_mixed(res_eq, lhs, t1, t2), _mixed(res_vec, d0, d1, d2))
    inputs = {"a": _floats(a), "b": _floats(b), "alpha1": al1, "alpha2": al2, "A": amp}
    return inputs, max(res_eq, res_vec), rel


def _family_scaling(rng, cfg):
    a, b = _signed3(rng, cfg), _signed3(rng, cfg)
    xi = b / a
    if _sum_cond(xi) > 1e3 or _sum_cond([xi[0] * xi[1], xi[0] * xi[2], xi[1] * xi[2]]) > 1e3:
        raise Reject
    A, B, C = rng.uniform(-3.0, 3.0, 3)
    sigma = float(_signed(rng, cfg))
    p, q = rng.uniform(-1.0, 1.0, 2)
    params = bg.FamilyParams(float(A), float(B), float(C))
    c = bg.intermediate_scaling(a, b, lambda w1, w2, w3: sigma * abs(w1) ** p * abs(w3) ** q)
    lhs = bg.family_bingle(a, b, params)
    t1 = bg.family_bingle(a, c, params)
    t2 = bg.family_bingle(c, b, params)
    res = abs(lhs - t1 - t2)
    inputs = {"a": _floats(a), "b": _floats(b), "ABC": [float(A), float(B), float(C)],
              "sigma": sigma, "p": float(p), "q": float(q)}
    return inputs, res, _mixed(res, lhs, t1, t2)


def _addfin_sym(rng, cfg):
    a = _signed3(rng, cfg)
    x1, x2 = float(_signed(rng, cfg)), float(_signed(rng, cfg))
    if abs(x1 + x2) < 0.05 * max(abs(x1), abs(x2)):
        raise Reject
    x3 = -x1 * x2 / (x1 + x2)
    xi = np.array([x1, x2, x3])
    if min(abs(x1 - x2), abs(x2 - x3), abs(x1 - x3)) < 1e-2 * np.max(np.abs(xi)):
        raise Reject  # nearly repeated ratios make the intermediate degenerate
    b = xi * a
    k = float(_signed(rng, cfg))
    try:
        c = bg.intermediate_orthogonal(a, b, (k, k, k))
    except PolyAngleError:
        raise Reject
    w = inv.pair_invariants(a, b)
    wd = inv.w_direct(xi)
    # the equation's arguments, built from the invariants of (a, b)
    x_eq = (w.w1**3 / w.w3, 0.0, (k * wd / w.w3) ** 3 / (-(k**3) * wd / w.w3))
    # the same three points through the vectors; the second slot of the
    # equation carries the invariants of the ordered pair (b, c)
    x_vec = tuple(p.w1**3 / p.w3 for p in (w, inv.pair_invariants(a, c), inv.pair_invariants(b, c)))
    if min(x_eq + x_vec) < -8.9:
        raise Reject  # ln(1 + x/9) near its branch point
    res = rel = 0.0
    for xs in (x_eq, x_vec):
        lhs, t1, t2 = (bg.ortho_log_phi(x) for x in xs)
        r = abs(lhs - t1 - t2)
        res, rel = max(res, r), max(rel, _mixed(r, lhs, t1, t2))
    inputs = {"a": _floats(a), "xi": _floats(xi), "k": k}
    return inputs, res, rel


def _addfin3_w2zero(rng, cfg):
    x = float(rng.uniform(-9.0, 1000.0))
    if x <= -9.0:
        raise Reject
    phi = bg.ortho_log_phi
    lhs, t1, t2 = phi(x), phi(0.0), phi(4.0 * x + 27.0)
    res = abs(lhs - t1 - t2)
    return {"x": x}, res, _mixed(res, lhs, t1, t2)


def sample_moebius(rng) -> bg.MoebiusParams:
    """Nondegenerate linear fractional map with coefficients in [-2, 2]."""
    while True:
        a, b, c, d = (float(t) for t in rng.uniform(-2.0, 2.0, 4))
        m = bg.MoebiusParams(a, b, c, d)
        if abs(m.det) >= 0.1 and abs(d) >= 0.1:
            return m


def moebius_residual(x: float, m: bg.MoebiusParams) -> tuple[float, float]:
    """(abs, rel) residual of Phi(psi(x)) = Phi(x) - Phi(0); raises Reject near poles."""
    if abs(m.c * x + m.d) < 0.05:
        raise Reject
    den = m.b * m.c * m.c * x + m.a * m.d * m.d
    if abs(den) < 0.05:
        raise Reject
    y = bg.psi_moebius(x, m)
    if abs(m.c * y + m.d) < 0.05:
        raise Reject
    lhs, t1, t2 = m(y), m(x), m(0.0)
    res = abs(lhs - t1 + t2)
    return res, _mixed(res, lhs, t1, t2)


def _addfin3_moebius(rng, cfg):
    m = sample_moebius(rng)
    x = float(rng.uniform(-10.0, 10.0))
    res, rel = moebius_residual(x, m)
    return {"x": x, "m": [m.a, m.b, m.c, m.d]}, res, rel


def _exp_additivity(rng, cfg):
    a, b, c = _pos3(rng, cfg), _pos3(rng, cfg), _pos3(rng, cfg)
    lam, mu = _logu(rng, cfg, 2)
    ab = hyper.exp_bingles(a, b)
    ac = hyper.exp_bingles(a, c)
    cb = hyper.exp_bingles(c, b)
    scaled = hyper.exp_bingles(lam * a, mu * b)
    metric = hyper.exp_bingles_metric_form(a, b)
    rel = 0.0
    worst = 0.0
    for i in range(2):
        r_add = abs(ab[i] - ac[i] - cb[i])
        r_conf = abs(scaled[i] - ab[i])
        r_met = abs(metric[i] - ab[i])
        worst = max(worst, r_add, r_conf, r_met)
        rel = max(rel, _mixed(r_add, ab[i], ac[i], cb[i]),
                  _mixed(r_conf, ab[i], scaled[i]), _mixed(r_met, ab[i], metric[i]))
    inputs = {"a": _floats(a), "b": _floats(b), "c": _floats(c), "lambda": float(lam), "mu": float(mu)}
    return inputs, worst, rel


def tringle_identity_residuals(a, b, c, d, A: float, B: float) -> list[tuple[float, float]]:
    """(abs, rel) residuals of the tringle identities and of variant-4 additivity."""
    T = tr.tringle_AB
    out = []

    def add(x, y):
        out.append((abs(x - y), _mixed(abs(x - y), x, y)))

    add(T(a, a, a, A, B), 0.0)
    add(T(a, a, c, A, B), B * bg.affine_bingle(a, c))
    add(T(a, c, b, A, B), T(a, b, c, B, A))
    add(T(b, a, c, A, B), T(a, b, c, -A - B, B))
    phi = lambda x, y, z: T(x, y, z, A, B)  # noqa: E731
    v4 = tr.tringle_additivity_residual(phi, a, b, c, d, 4)
    terms = (phi(a, b, c), phi(a, d, d), phi(d, b, d), phi(d, d, c))
    out.append((abs(v4), _mixed(abs(v4), *terms)))
    return out


def _tringle_v4(rng, cfg):
    a, b, c, d = (_pos3(rng, cfg) for _ in range(4))
    A, B = (float(t) for t in rng.uniform(-3.0, 3.0, 2))
    res = tringle_identity_residuals(a, b, c, d, A, B)
    inputs = {"a": _floats(a), "b": _floats(b), "c": _floats(c), "d": _floats(d), "A": A, "B": B}
    return inputs, max(r[0] for r in res), max(r[1] for r in res)


_PROP5_EXAMPLE = bg.FamilyParams(1.0, 0.0, 0.0, 1.0 / 3.0)


def _pc_prop5(rng, cfg):
    a, b = _pos3(rng, cfg), _pos3(rng, cfg)
    theta = float(rng.uniform(0.0, 2.0 * math.pi))
    c = bg.solve_conic_intermediate(a, b, theta)
    r1, r2 = bg.pc_coplanarity_residuals(a, b, c, _PROP5_EXAMPLE, alpha=0.0, beta=0.0, gamma=1.0)
    w1 = inv.pair_invariants(a, b).w1
    rel_cond = abs(r1) / max(1.0, 3.0 * w1)
    lhs = bg.nonlinear_bingle(a, b, _PROP5_EXAMPLE)
    t1 = bg.nonlinear_bingle(a, c, _PROP5_EXAMPLE)
    t2 = bg.nonlinear_bingle(c, b, _PROP5_EXAMPLE)
    r_add = abs(lhs - t1 - t2)
    inputs = {"a": _floats(a), "b": _floats(b), "theta": theta, "c": _floats(c)}
    return inputs, max(abs(r1), abs(r2), r_add), max(rel_cond, _mixed(r_add, lhs, t1, t2))


def _nabla(rng, cfg):
    xi = _signed3(rng, cfg)
    p = inv.PairInvariants.from_ratios(xi)
    lhs = inv.discriminant_sq(p)
    rhs = inv.w_direct(xi) ** 2
    scale = max(abs(rhs), *(abs(t) for t in inv.discriminant_terms(p)))
    res = abs(lhs - rhs)
    return {"xi": _floats(xi)}, res, res / scale


def _quad_table(rng, cfg):
    vecs = [_signed3(rng, cfg) for _ in range(4)]
    table = inv.quad_table(*vecs)
    worst = rel = 0.0
    for _, lhs, rhs in table.identities():
        r = abs(lhs - rhs)
        worst = max(worst, r)
        rel = max(rel, _mixed(r, lhs, rhs))
    inputs = dict(zip("abcd", (_floats(v) for v in vecs)))
    return inputs, worst, rel


def _roundtrip_cubic(rng, cfg):
    a, b, c, d = (_pos3(rng, cfg) for _ in range(4))
    table = inv.quad_table(a, b, c, d)
    roots = tr.reconstruct_ratio_triples(table)
    worst = rel = 0.0
    for r, true in zip(roots, (b / a, c / a, d / a)):
        err = np.abs(r.as_array() - np.sort(true))
        worst = max(worst, float(err.max()))
        rel = max(rel, float(np.max(err / np.abs(np.sort(true)))))
    w4 = inv.w4(a, b, c)
    member = min(abs(x - w4) for x in tr.generalized_tringle_w4(table))
    worst = max(worst, member)
    rel = max(rel, member / max(1.0, abs(w4)))
    inputs = {"a": _floats(a), "b": _floats(b), "c": _floats(c), "d": _floats(d)}
    return inputs, worst, rel


@dataclass(frozen=True)
class Check:
    run: Callable
    tolerance: float
    description: str


CHECKS: dict[EquationId, Check] = {
    EquationId.FUND1: Check(_fund1, 1e-9,
        "f = arccos sqrt(w1 w2) in the planar additivity equation; xi, alpha1, alpha2 > 0"),
    EquationId.EQ3_LOG: Check(_eq3_log, 1e-12,
        "F(xi) = F(x) + F(xi/x) with F = C1 ln; xi, x > 0"),
    EquationId.EQ6_ARC: Check(_eq6_arc, 1e-9,
        "psi(u) = psi(v) + psi(zeta^2) with psi = A arccos sqrt; 0 < u <= v < 1"),
    EquationId.ADD21_AFFINE: Check(_add21, 1e-12,
        "affine additivity with f = A ln|w3|, as a functional equation and through c = alpha1 a + alpha2 b"),
    EquationId.FAMILY_SCALING: Check(_family_scaling, 1e-12,
        "three-parameter family additive through c = s(w) a"),
    EquationId.ADDFIN_SYM: Check(_addfin_sym, 1e-11,
        "Phi(w1^3/w3) in the k1 = k2 = k3 orthogonal-intermediate equation on w2 = 0"),
    EquationId.ADDFIN3_W2ZERO: Check(_addfin3_w2zero, 1e-12,
        "Phi(x) = Phi(0) + Phi(4x + 27) for Phi = ln(1 + x/9) - ln 4, x in (-9, 1000)"),
    EquationId.ADDFIN3_MOEBIUS: Check(_addfin3_moebius, 1e-10,
        "Phi(psi(x)) = Phi(x) - Phi(0) for linear fractional Phi"),
    EquationId.EXP_ADDITIVITY: Check(_exp_additivity, 1e-12,
        "exponential bingles: additivity, conformal invariance, metric form"),
    EquationId.TRINGLE_V4: Check(_tringle_v4, 1e-10,
        "tringle identities of phi_(A,B) and variant-4 additivity"),
    EquationId.PC_PROP5: Check(_pc_prop5, 1e-9,
        "A=1, B=C=alpha=0, D=1/3: c on the conic surface makes ln w1 + ln D additive"),
    EquationId.NABLA_IDENTITY: Check(_nabla, 1e-9,
        "discriminant polynomial in w1, w2, w3 equals (product of ratio differences)^2"),
    EquationId.QUAD_TABLE_IDENTITIES: Check(_quad_table, 1e-12,
        "every relation of the quadruple invariant table"),
    EquationId.ROUNDTRIP_CUBIC: Check(_roundtrip_cubic, 1e-8,
        "ratio triples recovered from table invariants via cubics; w4 pairing membership"),
}


def _equation(eq) -> EquationId:
    try:
        return eq if isinstance(eq, EquationId) else EquationId(str(eq).upper())
    except ValueError:
        raise UnknownEquationError(f"unknown equation {eq!r}") from None


def sample_generator(eq: EquationId, seed: int, index: int) -> np.random.Generator:
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    key = (zlib.crc32(eq.value.encode()) << 64) | seed
    return np.random.Generator(np.random.Philox(key=key, counter=index << 128))


_MAX_DRAWS = 10_000


def _run_range(eq_value: str, seed: int, start: int, stop: int, cfg: SamplerConfig):
    eq = EquationId(eq_value)
    check = CHECKS[eq].run
    out = []
    for i in range(start, stop):
        rng = sample_generator(eq, seed, i)
        rejected = 0
        while True:
            try:
                inputs, res, rel = check(rng, cfg)
                break
            except Reject:
                rejected += 1
                if rejected >= _MAX_DRAWS:
                    raise RuntimeError(f"{eq.value}: sample {i} rejected {rejected} times")
        out.append((i, inputs, float(res), float(rel), rejected))
    return out


def run_check(eq, seed: int = 0, samples: int = 10_000, tol: float | None = None,
              workers: int = 1, sampler: SamplerConfig | None = None,
              max_failures: int = 100) -> VerificationReport:
    """Scan one equation and fold the per-sample residuals into a report.

    A sample fails when its relative residual exceeds `tol` (the equation's
    default when None).  At most `max_failures` failing samples are stored;
    ``failure_count`` counts all of them.
    """
    eq = _equation(eq)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    tol = CHECKS[eq].tolerance if tol is None else float(tol)
    cfg = sampler or SamplerConfig()
    t0 = time.perf_counter()
    if workers <= 1:
        rows = _run_range(eq.value, seed, 0, samples, cfg)
    else:
        bounds = np.linspace(0, samples, workers + 1).astype(int)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_range, eq.value, seed, int(lo), int(hi), cfg)
                       for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
            rows = [row for f in futures for row in f.result()]
    rows.sort(key=lambda r: r[0])

    max_abs = max_rel = 0.0
    rejections = failure_count = 0
    failures = []
    for i, inputs, res, rel, rejected in rows:
        rejections += rejected
        if not (res <= max_abs):
            max_abs = res
        if not (rel <= max_rel):
            max_rel = rel
        if not rel <= tol:
            failure_count += 1
            if len(failures) < max_failures:
                failures.append(Failure(i, inputs, rel))
    return VerificationReport(
        equation=eq,
        seed=seed,
        samples=samples,
        tolerance=tol,
        max_abs_residual=max_abs,
        max_rel_residual=max_rel,
        rejections=rejections,
        failure_count=failure_count,
        failures=failures,
        elapsed=time.perf_counter() - t0,
    )


def run_all(seed: int = 0, samples: int = 10_000, tol: float | None = None,
            workers: int = 1, sampler: SamplerConfig | None = None) -> list[VerificationReport]:
    return [run_check(eq, seed, samples, tol, workers, sampler) for eq in EquationId]
