import math

import numpy as np
import pytest

from polyangles import bingles as bg
from polyangles.errors import (
    DegenerateIntermediateError,
    DomainError,
    PoleHitError,
    SectorViolationError,
    SubmanifoldViolationError,
    VanishingInvariantError,
    ZeroScaleError,
    ZeroVectorError,
)
from polyangles.invariants import pair_invariants
from polyangles.metric import inv_vec, ortho3_residual

from conftest import pos_vec, signed_vec


def test_euclid_reference_angles():
    assert bg.euclid_phi1((1, 0), (0, 1)) == pytest.approx(math.pi / 2)
    assert bg.euclid_phi2((2, 0), (1, 0)) == pytest.approx(math.log(2))
    assert bg.euclid_phi1((1, 2, 3), (2, 4, 6)) == pytest.approx(0.0, abs=1e-7)


def test_euclid_phi2_additive(rng):
    for _ in range(50):
        a, b, c = (signed_vec(rng) for _ in range(3))
        r = bg.euclid_phi2(a, b) - bg.euclid_phi2(a, c) - bg.euclid_phi2(c, b)
        assert abs(r) < 1e-12


def test_pseudo_angle_of_boost():
    t = 0.7
    assert bg.pseudo_phi1((1, 0), (math.cosh(t), math.sinh(t))) == pytest.approx(t)


def test_pseudo_angle_sector_errors():
    with pytest.raises(SectorViolationError):
        bg.pseudo_phi1((1, 0), (0, 1))
    with pytest.raises(ZeroVectorError):
        bg.pseudo_phi1((0, 0), (1, 0))


def test_affine_bingle():
    assert bg.affine_bingle((1, 1, 1), (2, 2, 2)) == pytest.approx(math.log(8))
    assert bg.affine_bingle((1, 1, 1), (2, 2, 2), A=0.5) == pytest.approx(0.5 * math.log(8))
    assert bg.affine_bingle((1, 2, 3), (1, 2, 3)) == 0.0


def test_affine_bingle_additive_through_any_intermediate(rng):
    for _ in range(200):
        a, b, c = (signed_vec(rng) for _ in range(3))
        r = bg.affine_bingle(a, b) - bg.affine_bingle(a, c) - bg.affine_bingle(c, b)
        assert abs(r) < 1e-12 * max(1.0, abs(bg.affine_bingle(a, b)))


def test_family_bingle_on_rays():
    p = bg.FamilyParams(0.7, -1.3, 2.0)
    lam = 1.9
    a = np.array([0.4, -2.0, 3.0])
    expected = (p.A + 2 * p.B + 3 * p.C) * math.log(lam)
    assert bg.family_bingle(a, lam * a, p) == pytest.approx(expected, rel=1e-13)
    assert bg.family_bingle(a, a, p) == pytest.approx(0.0, abs=1e-15)


def test_family_params_and_vanishing_invariant():
    with pytest.raises(ValueError):
        bg.FamilyParams(1, 0, 0, D=0.0)
    # xi = (1, 1, -1/2) has w2 = 0
    a = np.ones(3)
    b = np.array([1.0, 1.0, -0.5])
    with pytest.raises(VanishingInvariantError):
        bg.family_bingle(a, b, bg.FamilyParams(0, 1, 0))
    # zero exponent tolerates the vanishing invariant
    bg.family_bingle(a, b, bg.FamilyParams(1, 0, 1))


def test_family_bingle_scaling_additivity(rng):
    p = bg.FamilyParams(1.5, -0.5, 0.25)
    for _ in range(100):
        a, b = pos_vec(rng), pos_vec(rng)
        c = bg.intermediate_scaling(a, b, lambda w1, w2, w3: 0.3 * w1 / w3**0.5)
        r = bg.family_bingle(a, b, p) - bg.family_bingle(a, c, p) - bg.family_bingle(c, b, p)
        assert abs(r) < 1e-12 * max(1.0, abs(bg.family_bingle(a, b, p)))


def test_zero_scale():
    with pytest.raises(ZeroScaleError):
        bg.intermediate_scaling((1, 1, 1), (1, 2, 3), lambda *w: 0.0)


def test_ortho_log_phi_anchor_and_domain():
    assert bg.ortho_log_phi(-27 / 4) == pytest.approx(-math.log(16))
    assert bg.ortho_log_phi(0.0) == pytest.approx(-math.log(4))
    with pytest.raises(DomainError):
        bg.ortho_log_phi(-9.0)


def test_ortho_bingle_log_on_submanifold():
    # xi = (1, 1, -1/2): w1 = 3/2, w2 = 0, w3 = -1/2, x = -27/4
    assert bg.ortho_bingle_log((1, 1, 1), (1, 1, -0.5)) == pytest.approx(-math.log(16))
    with pytest.raises(SubmanifoldViolationError):
        bg.ortho_bingle_log((1, 1, 1), (1, 2, 3))


def test_psi_moebius_reduces_to_unimodular_form():
    m = bg.MoebiusParams(2.0, 1.0, 1.0, 1.0)  # ad - bc = 1
    for x in (-0.5, 0.3, 4.0):
        printed = m.d * ((1 - m.b * m.c) * x - m.b * m.d**2) / (m.c * (m.a * m.d - 1) * x + m.a * m.d**2)
        assert bg.psi_moebius(x, m) == pytest.approx(printed)
        assert bg.psi_moebius(x, m) == pytest.approx(-1.0 / (x + 2.0))


def test_psi_moebius_homomorphism_any_scaling():
    m = bg.MoebiusParams(3.0, -1.0, 0.5, 2.0)
    for x in (-3.0, 0.1, 1.7, 9.0):
        lhs = m(bg.psi_moebius(x, m))
        assert lhs == pytest.approx(m(x) - m(0.0), rel=1e-13)


def test_psi_moebius_errors():
    with pytest.raises(DomainError):
        bg.psi_moebius(1.0, bg.MoebiusParams(0, 0, 1, 2))
    with pytest.raises(PoleHitError):
        bg.psi_moebius(1.0, bg.MoebiusParams(1, 1, 1, 0))


def test_ortho_bingle_moebius_is_phi_of_x():
    m = bg.MoebiusParams(1.0, 2.0, -0.5, 3.0)
    a, b = np.array([1.0, 2.0, -1.0]), np.array([0.5, 1.0, 2.0])
    w = pair_invariants(a, b)
    assert bg.ortho_bingle_moebius(a, b, m) == pytest.approx(m(w.w1**3 / w.w3), rel=1e-12)


def test_intermediate_orthogonal(rng):
    for _ in range(200):
        a, b = signed_vec(rng), signed_vec(rng)
        k = rng.uniform(0.5, 2.0)
        c = bg.intermediate_orthogonal(a, b, (k, k, k))
        scale = np.linalg.norm(c) * np.linalg.norm(bg.circ(a, b))
        assert abs(ortho3_residual(a, b, c)) < 1e-12 * scale
        assert abs(np.dot(c, inv_vec(a))) < 1e-12 * np.linalg.norm(c) * np.linalg.norm(inv_vec(a))


def test_intermediate_orthogonal_general_k_not_orthogonal_to_inverse():
    a, b = np.array([1.0, 2.0, 3.0]), np.array([2.0, -1.0, 0.5])
    c = bg.intermediate_orthogonal(a, b, (1.0, 2.0, 3.0))
    assert abs(ortho3_residual(a, b, c)) < 1e-12
    assert abs(np.dot(c, inv_vec(a))) > 1e-3


def test_intermediate_orthogonal_degenerate():
    a = np.array([1.0, 2.0, 3.0])
    with pytest.raises(DegenerateIntermediateError):
        bg.intermediate_orthogonal(a, 2.0 * a, (1, 1, 1))


def test_conic_surface_and_solver(rng):
    assert bg.conic_surface_residual((1, 2, 3), (1, 2, 3)) == pytest.approx(0.0)
    for _ in range(50):
        a, b = pos_vec(rng), pos_vec(rng)
        theta = rng.uniform(0, 2 * math.pi)
        c = bg.solve_conic_intermediate(a, b, theta)
        xi = b / a
        assert abs(bg.conic_surface_residual(c / a, xi)) < 1e-10 * xi.sum()
        p = bg.FamilyParams(1.0, 0.0, 0.0, 1 / 3)
        r1, r2 = bg.pc_coplanarity_residuals(a, b, c, p, 0.0, 0.0, 1.0)
        assert r2 == 0.0
        assert abs(r1) < 1e-10 * xi.sum()


def test_pc_rpow_domain():
    p = bg.FamilyParams(1.0, 0.5, 0.0)
    with pytest.raises(DomainError):
        bg.pc_coplanarity_residuals((1, 1, 1), (1, 2, 3), (2, 1, 1), p, 0.0, 0.0, -1.0)


def test_section_residual_origin_and_poles():
    assert bg.section_residual(0.0, 0.0, (1, 1, 1)) == 0.0
    with pytest.raises(PoleHitError):
        bg.section_residual(1 / 3, 0.0, (1, 1, 1))


def test_fig1_section_generic_xi():
    xi = (1.0, 2.0, 0.5)
    pts = bg.fig1_section(xi, grid=200)
    assert len(pts) > 100
    for u, v in pts:
        assert abs(bg.section_residual(u, v, xi)) <= 1e-10
