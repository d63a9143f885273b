"""Pair angles: Euclidean references, the affine bingle and the three-parameter family.

Run: python demos/02_bingles.py
"""
import math

import numpy as np

from polyangles import bingles as bg
from polyangles.invariants import pair_invariants

rng = np.random.default_rng(0)

# Euclidean plane: the usual angle and the log of the norm ratio
print("angle between (1,0) and (1,1):", bg.euclid_phi1((1, 0), (1, 1)), "=", math.pi / 4)
print("ln |a|/|b| for (3,4), (1,0)  :", bg.euclid_phi2((3, 4), (1, 0)))

# Pseudo-Euclidean plane: boosts add rapidities
t1, t2 = 0.4, 1.1
u0 = np.array([1.0, 0.0])
boost = lambda t: np.array([math.cosh(t), math.sinh(t)])  # noqa: E731
print("rapidity sum check:", bg.pseudo_phi1(u0, boost(t1 + t2)), "vs", t1 + t2)

# H3: the pair invariants are the symmetric polynomials of xi = b/a
a = np.array([1.0, -2.0, 0.5])
b = np.array([2.0, 1.0, 3.0])
w = pair_invariants(a, b)
print("xi =", b / a, " w =", w.as_tuple())

# the affine bingle ln|w3| is additive through any intermediate vector
for _ in range(3):
    c = rng.normal(size=3)
    lhs = bg.affine_bingle(a, b)
    rhs = bg.affine_bingle(a, c) + bg.affine_bingle(c, b)
    print(f"affine: {lhs:+.15f} = {rhs:+.15f}")

# the family ln|w1^A w2^B w3^C| needs c on the ray of a, scaled by s(w)
p = bg.FamilyParams(1.0, -0.5, 2.0)
c = bg.intermediate_scaling(a, b, lambda w1, w2, w3: 0.5 * abs(w1) ** 0.3)
print("family:", bg.family_bingle(a, b, p), "=",
      bg.family_bingle(a, c, p) + bg.family_bingle(c, b, p))
