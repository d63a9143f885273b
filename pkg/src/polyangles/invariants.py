"""Conformal invariants of vector pairs, triples and quadruples.

Ratios are taken componentwise relative to the first vector, e.g. for a pair
(a, b) the ratio vector is xi = b / a.  The pair invariants are the elementary
symmetric polynomials of xi.  The quadruple table follows the metric
normalisation: w2^{xy} = bm3(x, y, y) / bm3(x, x, x) = e2(y/x) / 3,
w3^{xy} = e3(y/x), w4^{xyz} = bm3(x, y, z) / bm3(x, x, x).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .metric import as_vector3, require_non_isotropic

RatioVector = np.ndarray


def ratio(a, b) -> RatioVector:
    """xi_i = b_i / a_i."""
    a = require_non_isotropic(a, "a")
    return as_vector3(as_vector3(b) / a)


def symmetric_polys(p) -> tuple[float, float, float]:
    p1, p2, p3 = (float(x) for x in p)
    return p1 + p2 + p3, p1 * p2 + p1 * p3 + p2 * p3, p1 * p2 * p3


@dataclass(frozen=True)
class PairInvariants:
    w1: float
    w2: float
    w3: float

    @classmethod
    def from_ratios(cls, xi) -> "PairInvariants":
        return cls(*symmetric_polys(xi))

    def as_tuple(self) -> tuple[float, float, float]:
        return self.w1, self.w2, self.w3


def pair_invariants(a, b) -> PairInvariants:
    return PairInvariants.from_ratios(ratio(a, b))


# Helpers of the quadruple table.

def delta(p) -> float:
    p1, p2, p3 = p
    return float(p1 * p2 * p3)


def delta1(p, q) -> float:
    return float(p[1] * q[2] + p[2] * q[1])


def delta2(p, q) -> float:
    # printed as p1 q3 + q3 p1; the symmetric reading p1 q3 + p3 q1 is the one
    # consistent with the orthogonality form and with delta1, delta3
    return float(p[0] * q[2] + p[2] * q[0])


def delta3(p, q) -> float:
    return float(p[0] * q[1] + p[1] * q[0])


def delta_sum(p, q) -> float:
    return delta1(p, q) + delta2(p, q) + delta3(p, q)


def w1_of(p) -> float:
    return symmetric_polys(p)[0]


def w2_of(p) -> float:
    return symmetric_polys(p)[1]


def w4_from_ratios(xi, eta) -> float:
    return delta_sum(xi, eta) / 6.0


def w4(a, b, c) -> float:
    """Cross invariant of an ordered triple, bm3(a, b, c) / bm3(a, a, a)."""
    return w4_from_ratios(ratio(a, b), ratio(a, c))


def w_direct(xi) -> float:
    """(xi1 - xi2)(xi2 - xi3)(xi1 - xi3)."""
    x1, x2, x3 = (float(t) for t in xi)
    return (x1 - x2) * (x2 - x3) * (x1 - x3)


def discriminant_terms(p: PairInvariants) -> tuple[float, ...]:
    w1, w2, w3 = p.as_tuple()
    return (
        -4.0 * w2**3,
        -27.0 * w3**2,
        w1**2 * w2**2,
        -4.0 * w1**3 * w3,
        18.0 * w1 * w2 * w3,
    )


def discriminant_sq(p: PairInvariants) -> float:
    """w^2 expressed through the pair invariants (the cubic discriminant)."""
    return float(sum(discriminant_terms(p)))


# Labels exactly as superscripts in the quadruple table.
W4_LABELS = (
    "abc", "abd", "adb", "acd", "adc", "bad", "bda", "cad", "cda",
    "bcd", "bdc", "cbd", "cdb", "dab", "dba", "dac", "dca", "dbc", "dcb",
)
W3_LABELS = ("ab", "ba", "ac", "ca", "ad", "da", "bc", "cb", "bd", "db", "cd", "dc")
W2_LABELS = ("ab", "ac", "ad", "ba", "ca", "da", "bc", "cb", "bd", "db", "cd", "dc")


@dataclass(frozen=True)
class QuadInvariantTable:
    """Named conformal invariants of a quadruple (a, b, c, d).

    ``values`` maps labels such as ``"w4_abc"``, ``"w3_bd"``, ``"w2_ca"`` to
    reals.  ``helpers`` holds Delta_p, w1(p), w2(p) for the ratio triples
    xi = b/a, eta = c/a, delta = d/a.
    """

    values: dict[str, float]
    xi: tuple[float, float, float]
    eta: tuple[float, float, float]
    delta: tuple[float, float, float]
    helpers: dict[str, float] = field(default_factory=dict)

    def __getitem__(self, label: str) -> float:
        return self.values[label]

    def to_json(self) -> dict[str, float]:
        out = dict(self.values)
        out.update(self.helpers)
        return out

    def identities(self) -> list[tuple[str, float, float]]:
        """Every relation of the table as (name, lhs, rhs)."""
        return table_identities(self)


def quad_table(a, b, c, d) -> QuadInvariantTable:
    vecs = {
        "a": require_non_isotropic(a, "a"),
        "b": require_non_isotropic(b, "b"),
        "c": require_non_isotropic(c, "c"),
        "d": require_non_isotropic(d, "d"),
    }

    def rel(x, y):
        return vecs[y] / vecs[x]

    values: dict[str, float] = {}
    for lab in W4_LABELS:
        x, y, z = lab
        values[f"w4_{lab}"] = w4_from_ratios(rel(x, y), rel(x, z))
    for lab in W3_LABELS:
        values[f"w3_{lab}"] = delta(rel(*lab))
    for lab in W2_LABELS:
        values[f"w2_{lab}"] = w2_of(rel(*lab)) / 3.0

    xi, eta, dl = rel("a", "b"), rel("a", "c"), rel("a", "d")
    helpers = {}
    for name, p in (("xi", xi), ("eta", eta), ("delta", dl)):
        helpers[f"Delta_{name}"] = delta(p)
        helpers[f"w1_{name}"] = w1_of(p)
        helpers[f"w2_{name}"] = w2_of(p)
    return QuadInvariantTable(
        values=values,
        xi=tuple(map(float, xi)),
        eta=tuple(map(float, eta)),
        delta=tuple(map(float, dl)),
        helpers=helpers,
    )


def table_identities(t: QuadInvariantTable) -> list[tuple[str, float, float]]:
    xi, eta, dl = (np.asarray(p) for p in (t.xi, t.eta, t.delta))
    v = t.values
    dx, de, dd = delta(xi), delta(eta), delta(dl)
    out = [
        ("6w4_abc", 6 * v["w4_abc"], delta_sum(xi, eta)),
        ("6w4_abd", 6 * v["w4_abd"], delta_sum(xi, dl)),
        # printed as "6w4^{abd} = w4^{adb}"; read as symmetry in the last two slots
        ("6w4_adb", 6 * v["w4_adb"], delta_sum(xi, dl)),
        ("6w4_acd", 6 * v["w4_acd"], delta_sum(eta, dl)),
        ("6w4_adc", 6 * v["w4_adc"], delta_sum(eta, dl)),
        ("w4_bad", v["w4_bad"], v["w4_abd"] / dx),
        ("w4_bda", v["w4_bda"], v["w4_abd"] / dx),
        ("w4_cad", v["w4_cad"], v["w4_acd"] / de),
        ("w4_cda", v["w4_cda"], v["w4_acd"] / de),
        ("6w4_bcd", 6 * v["w4_bcd"], delta_sum(eta / xi, dl / xi)),
        ("6w4_bdc", 6 * v["w4_bdc"], delta_sum(eta / xi, dl / xi)),
        ("6w4_cbd", 6 * v["w4_cbd"], delta_sum(xi / eta, dl / eta)),
        ("6w4_cdb", 6 * v["w4_cdb"], delta_sum(xi / eta, dl / eta)),
        ("w4_dab", v["w4_dab"], v["w4_abd"] / dd),
        ("w4_dba", v["w4_dba"], v["w4_abd"] / dd),
        ("w4_dac", v["w4_dac"], v["w4_acd"] / dd),
        ("w4_dca", v["w4_dca"], v["w4_acd"] / dd),
        ("6w4_dbc", 6 * v["w4_dbc"], delta_sum(eta / dl, xi / dl)),
        ("6w4_dcb", 6 * v["w4_dcb"], delta_sum(eta / dl, xi / dl)),
        ("w3_ab", v["w3_ab"], dx),
        ("1/w3_ba", 1 / v["w3_ba"], dx),
        ("w3_ac", v["w3_ac"], de),
        ("1/w3_ca", 1 / v["w3_ca"], de),
        ("w3_ad", v["w3_ad"], dd),
        ("1/w3_da", 1 / v["w3_da"], dd),
        ("w3_bc", v["w3_bc"], de / dx),
        ("1/w3_cb", 1 / v["w3_cb"], de / dx),
        ("w3_bd", v["w3_bd"], dd / dx),
        ("1/w3_db", 1 / v["w3_db"], dd / dx),
        ("w3_cd", v["w3_cd"], dd / de),
        ("1/w3_dc", 1 / v["w3_dc"], dd / de),
        ("3w2_ab", 3 * v["w2_ab"], w2_of(xi)),
        ("3w2_ac", 3 * v["w2_ac"], w2_of(eta)),
        ("3w2_ad", 3 * v["w2_ad"], w2_of(dl)),
        ("3w2_ba", 3 * v["w2_ba"], w1_of(xi) / dx),
        ("3w2_ca", 3 * v["w2_ca"], w1_of(eta) / de),
        ("3w2_da", 3 * v["w2_da"], w1_of(dl) / dd),
        ("3w2_bc", 3 * v["w2_bc"], w2_of(eta / xi)),
        ("3w2_cb", 3 * v["w2_cb"], w2_of(xi / eta)),
        ("3w2_bd", 3 * v["w2_bd"], w2_of(dl / xi)),
        ("3w2_db", 3 * v["w2_db"], w2_of(xi / dl)),
        ("3w2_cd", 3 * v["w2_cd"], w2_of(dl / eta)),
        ("3w2_dc", 3 * v["w2_dc"], w2_of(eta / dl)),
    ]
    return out

