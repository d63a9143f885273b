"""Berwald-Moor trilinear form on H3 and the quadratic reference forms.

Vectors are given in isotropic coordinates as any length-3 sequence of reals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError, IsotropicVectorError

Vector3 = np.ndarray

_PERMS = tuple(permutations(range(3)))


def as_vector(v, dim: int | None = None) -> np.ndarray:
    """Return `v` as a read-only 1-D float array, optionally checking its length."""
    arr = np.array(v, dtype=float).reshape(-1)
    if dim is not None and arr.shape[0] != dim:
        raise DimensionMismatchError(f"expected {dim} components, got {arr.shape[0]}")
    arr.flags.writeable = False
    return arr


def as_vector3(v) -> Vector3:
    return as_vector(v, 3)


def is_isotropic(v) -> bool:
    """A vector of H3 is isotropic when one of its components vanishes."""
    return bool(np.any(as_vector3(v) == 0.0))


def require_non_isotropic(v, name: str = "vector") -> Vector3:
    arr = as_vector3(v)
    if np.any(arr == 0.0):
        raise IsotropicVectorError(f"{name} = {arr.tolist()} is isotropic")
    return arr


def bm3(a, b, c) -> float:
    """Symmetric trilinear Berwald-Moor form, normalized so bm3(a, a, a) = a1*a2*a3.

    The six permutation terms are summed with ``math.fsum`` and every product
    multiplies its factors in sorted order, so the value is bit-for-bit
    invariant under any reordering of the arguments.
    """
    a, b, c = as_vector3(a), as_vector3(b), as_vector3(c)
    terms = []
    for i, j, k in _PERMS:
        x, y, z = sorted((a[i], b[j], c[k]))
        terms.append(x * y * z)
    return math.fsum(terms) / 6.0


def circ(a, b) -> Vector3:
    """The vector a o b whose Euclidean dot with c is the 3-orthogonality form."""
    a1, a2, a3 = as_vector3(a)
    b1, b2, b3 = as_vector3(b)
    return as_vector3((a2 * b3 + a3 * b2, a1 * b3 + a3 * b1, a2 * b1 + a1 * b2))


def ortho3_residual(a, b, c) -> float:
    """Left-hand side of the 3-orthogonality condition; equals 6 * bm3(a, b, c)."""
    return float(np.dot(as_vector3(c), circ(a, b)))


def inv_vec(a) -> Vector3:
    a = require_non_isotropic(a, "a")
    return as_vector3(1.0 / a)


@dataclass(frozen=True)
class QuadraticForm:
    """Diagonal bilinear form given by its signature (+1/-1 per axis)."""

    signature: tuple[int, ...]

    def __post_init__(self):
        sig = tuple(int(s) for s in self.signature)
        if not sig or any(s not in (1, -1) for s in sig):
            raise ValueError(f"signature entries must be +1 or -1, got {self.signature}")
        object.__setattr__(self, "signature", sig)

    @property
    def dimension(self) -> int:
        return len(self.signature)

    @classmethod
    def euclidean(cls, dimension: int) -> "QuadraticForm":
        return cls((1,) * dimension)

    @classmethod
    def pseudo_euclidean_plane(cls) -> "QuadraticForm":
        return cls((1, -1))


EUCLID3 = QuadraticForm.euclidean(3)
MINKOWSKI2 = QuadraticForm.pseudo_euclidean_plane()


def qform_dot(q: QuadraticForm, u: Sequence[float], v: Sequence[float]) -> float:
    u = as_vector(u, q.dimension)
    v = as_vector(v, q.dimension)
    return float(np.dot(np.multiply(q.signature, u), v))


def cross3(u, v) -> Vector3:
    return as_vector3(np.cross(as_vector3(u), as_vector3(v)))


def vol3(u, v, w) -> float:
    """Mixed product u . (v x w)."""
    return float(np.dot(as_vector3(u), np.cross(as_vector3(v), as_vector3(w))))
