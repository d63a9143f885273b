import numpy as np
import pytest

from polyangles.errors import IsotropicVectorError
from polyangles.invariants import (
    W2_LABELS,
    W3_LABELS,
    W4_LABELS,
    PairInvariants,
    delta2,
    discriminant_sq,
    discriminant_terms,
    pair_invariants,
    quad_table,
    ratio,
    w4,
    w_direct,
)
from polyangles.metric import bm3

from conftest import signed_vec


def test_pair_invariants_hand_case():
    assert pair_invariants((1, 1, 1), (1, 2, 3)).as_tuple() == (6.0, 11.0, 6.0)
    assert pair_invariants((2, 2, 2), (2, 2, 2)).as_tuple() == (3.0, 3.0, 1.0)


def test_pair_invariants_are_conformal(rng):
    for _ in range(20):
        a, b = signed_vec(rng), signed_vec(rng)
        lam = rng.uniform(0.5, 2.0)
        w, ws = pair_invariants(a, b), pair_invariants(lam * a, lam * b)
        assert np.allclose(w.as_tuple(), ws.as_tuple(), rtol=1e-13)


def test_w3_is_cube_norm_ratio(rng):
    for _ in range(20):
        a, b = signed_vec(rng), signed_vec(rng)
        assert pair_invariants(a, b).w3 == pytest.approx(bm3(b, b, b) / bm3(a, a, a), rel=1e-13)


def test_ratio_requires_non_isotropic_base():
    with pytest.raises(IsotropicVectorError):
        ratio((1, 0, 1), (1, 1, 1))


def test_discriminant_hand_case():
    p = PairInvariants.from_ratios((1, 2, 3))
    assert discriminant_sq(p) == 4.0
    assert w_direct((1, 2, 3)) == -2.0
    assert discriminant_sq(PairInvariants.from_ratios((2, 2, 5))) == 0.0


def test_discriminant_identity_random(rng):
    for _ in range(500):
        xi = signed_vec(rng)
        p = PairInvariants.from_ratios(xi)
        scale = max(abs(t) for t in discriminant_terms(p))
        assert abs(discriminant_sq(p) - w_direct(xi) ** 2) <= 1e-12 * scale


def test_delta2_symmetric_reading():
    assert delta2((1, 2, 3), (4, 5, 6)) == 1 * 6 + 3 * 4


def test_w4_values():
    assert w4((1, 2, 3), (1, 2, 3), (1, 2, 3)) == pytest.approx(1.0)
    assert w4((1, 1, 1), (1, 2, 3), (1, 1, 1)) == pytest.approx(2.0)


def test_w4_matches_trilinear_form(rng):
    for _ in range(20):
        a, b, c = (signed_vec(rng) for _ in range(3))
        assert w4(a, b, c) == pytest.approx(bm3(a, b, c) / bm3(a, a, a), rel=1e-11)


def test_quad_table_labels_and_json(rng):
    t = quad_table(*(signed_vec(rng) for _ in range(4)))
    js = t.to_json()
    assert len(W4_LABELS) == 19 and len(W3_LABELS) == 12 and len(W2_LABELS) == 12
    for lab in W4_LABELS:
        assert f"w4_{lab}" in js
    for lab in W3_LABELS:
        assert f"w3_{lab}" in js
    assert {"Delta_xi", "w1_eta", "w2_delta"} <= set(js)
    assert all(isinstance(v, float) for v in js.values())


def test_quad_table_metric_normalisation(rng):
    a, b, c, d = (signed_vec(rng) for _ in range(4))
    t = quad_table(a, b, c, d)
    assert t["w2_ab"] == pytest.approx(bm3(a, b, b) / bm3(a, a, a), rel=1e-11)
    assert t["w3_cd"] == pytest.approx(bm3(d, d, d) / bm3(c, c, c), rel=1e-12)
    assert t["w4_dbc"] == pytest.approx(bm3(d, b, c) / bm3(d, d, d), rel=1e-10)


def test_quad_table_identities_signed(rng):
    for _ in range(200):
        t = quad_table(*(signed_vec(rng) for _ in range(4)))
        ids = t.identities()
        assert len(ids) == 43
        for name, lhs, rhs in ids:
            assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), abs(rhs)), name
