import math
from itertools import permutations

import numpy as np
import pytest

from polyangles.errors import DimensionMismatchError, IsotropicVectorError
from polyangles.metric import (
    EUCLID3,
    MINKOWSKI2,
    QuadraticForm,
    as_vector,
    bm3,
    circ,
    cross3,
    inv_vec,
    is_isotropic,
    ortho3_residual,
    qform_dot,
    require_non_isotropic,
    vol3,
)

from conftest import signed_vec


def test_bm3_diagonal_is_component_product():
    assert bm3((1, 2, 3), (1, 2, 3), (1, 2, 3)) == 6.0
    assert bm3((1, 1, 1), (1, 1, 1), (1, 1, 1)) == 1.0


def test_bm3_isotropic_basis():
    e = np.eye(3)
    assert bm3(e[0], e[1], e[2]) == pytest.approx(1 / 6)
    assert bm3(e[0], e[0], e[1]) == 0.0


def test_bm3_is_exactly_symmetric(rng):
    for _ in range(50):
        a, b, c = (signed_vec(rng) for _ in range(3))
        vals = {bm3(*p) for p in permutations((a, b, c))}
        assert len(vals) == 1


def test_circ_and_ortho3_residual(rng):
    assert np.array_equal(circ((1, 0, 0), (0, 1, 0)), [0.0, 0.0, 1.0])
    for _ in range(20):
        a, b, c = (signed_vec(rng) for _ in range(3))
        assert np.allclose(circ(a, b), circ(b, a))
        assert ortho3_residual(a, b, c) == float(np.dot(c, circ(a, b)))
        assert ortho3_residual(a, b, c) == pytest.approx(6 * bm3(a, b, c), rel=1e-12)


def test_inv_vec_and_isotropy():
    assert np.allclose(inv_vec((2, 4, -0.5)), [0.5, 0.25, -2.0])
    assert is_isotropic((1, 0, 2))
    assert not is_isotropic((1, 1, 2))
    with pytest.raises(IsotropicVectorError):
        require_non_isotropic((0, 1, 1), "a")


def test_quadratic_forms():
    assert qform_dot(EUCLID3, (1, 0, 0), (0, 1, 0)) == 0.0
    t = 1.0
    assert qform_dot(MINKOWSKI2, (1, 0), (math.cosh(t), math.sinh(t))) == pytest.approx(1.5430806348152437)
    assert QuadraticForm((1, -1)).dimension == 2
    with pytest.raises(DimensionMismatchError):
        qform_dot(EUCLID3, (1, 0), (0, 1))


def test_cross_and_volume(rng):
    e = np.eye(3)
    assert vol3(e[0], e[1], e[2]) == 1.0
    for _ in range(20):
        u, v = signed_vec(rng), signed_vec(rng)
        w = cross3(u, v)
        scale = np.linalg.norm(u) * np.linalg.norm(v) * np.linalg.norm(w)
        assert abs(np.dot(w, u)) < 1e-12 * scale
        assert abs(np.dot(w, v)) < 1e-12 * scale
        assert vol3(u, v, u) == pytest.approx(0.0, abs=1e-12 * scale)


def test_as_vector_checks_dimension():
    v = as_vector([1, 2, 3], 3)
    assert v.dtype == float
    with pytest.raises(DimensionMismatchError):
        as_vector([1, 2], 3)
