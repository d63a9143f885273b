import math

import numpy as np
import pytest

from polyangles import tringles as tr
from polyangles.bingles import affine_bingle
from polyangles.errors import NonRealRootsError, UnsupportedError
from polyangles.invariants import quad_table, w4

from conftest import pos_vec


def test_tringle_hand_values():
    one, two = np.ones(3), 2 * np.ones(3)
    assert tr.tringle_AB(one, one, one, 1.3, -0.4) == 0.0
    assert tr.tringle_AB(one, two, one, 1.5, 2.0) == pytest.approx(1.5 * math.log(8))


def test_tringle_identities(rng):
    T = tr.tringle_AB
    for _ in range(100):
        a, b, c = (pos_vec(rng) for _ in range(3))
        A, B = rng.uniform(-3, 3, 2)
        assert T(a, a, c, A, B) == pytest.approx(B * affine_bingle(a, c), abs=1e-12)
        assert T(a, c, b, A, B) == pytest.approx(T(a, b, c, B, A), abs=1e-12)
        assert T(b, a, c, A, B) == pytest.approx(T(a, b, c, -A - B, B), abs=1e-12)


def test_additivity_variants(rng):
    phi = lambda x, y, z: tr.tringle_AB(x, y, z, 0.8, -1.1)  # noqa: E731
    a, b, c, d = (pos_vec(rng) for _ in range(4))
    assert abs(tr.tringle_additivity_residual(phi, a, b, c, d, 4)) < 1e-12
    with pytest.raises(UnsupportedError):
        tr.tringle_additivity_residual(phi, a, b, c, d, 3)
    with pytest.raises(ValueError):
        tr.tringle_additivity_residual(phi, a, b, c, d, 5)


def test_cubic_solver():
    assert tr.solve_cubic_real(tr.CubicCoeffs.from_roots((3, 1, 2))).roots == pytest.approx((1, 2, 3))
    assert tr.solve_cubic_real(tr.CubicCoeffs(-3, 3, -1)).roots == pytest.approx((1, 1, 1))
    with pytest.raises(NonRealRootsError):
        tr.solve_cubic_real(tr.CubicCoeffs(0.0, 1.0, 0.0))


def test_cubic_discriminant():
    assert tr.CubicCoeffs.from_roots((1, 2, 3)).discriminant == pytest.approx(4.0)


def test_reconstruct_hand_quadruple():
    a = np.array([1.0, 1.0, 1.0])
    b, c, d = np.array([1.0, 2.0, 3.0]), np.array([2.0, 0.5, 4.0]), np.array([3.0, 1.5, 0.2])
    xi, eta, dl = tr.reconstruct_ratio_triples(quad_table(a, b, c, d))
    assert xi.roots == pytest.approx((1, 2, 3), rel=1e-10)
    assert eta.roots == pytest.approx((0.5, 2, 4), rel=1e-10)
    assert dl.roots == pytest.approx((0.2, 1.5, 3), rel=1e-10)


def test_generalized_tringle_contains_w4(rng):
    for _ in range(100):
        a, b, c, d = (pos_vec(rng) for _ in range(4))
        cands = tr.generalized_tringle_w4(quad_table(a, b, c, d))
        target = w4(a, b, c)
        assert min(abs(x - target) for x in cands) < 1e-8 * max(1.0, abs(target))
        assert list(cands) == sorted(cands)
