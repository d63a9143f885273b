"""Tringles and the recovery of ratio triples from quadruple invariants.

Run: python demos/05_tringles_cubics.py
"""
import numpy as np

from polyangles import tringles as tr
from polyangles.invariants import quad_table, w4

rng = np.random.default_rng(5)
a, b, c, d = (np.exp(rng.normal(size=3)) for _ in range(4))

A, B = 0.7, -1.2
phi = lambda x, y, z: tr.tringle_AB(x, y, z, A, B)  # noqa: E731
print("tringle(a,b,c)       =", phi(a, b, c))
print("variant-4 residual   =", tr.tringle_additivity_residual(phi, a, b, c, d, 4))

# the table knows a, b, c, d only through conformal invariants, yet the
# three ratio vectors come back as roots of three cubics
t = quad_table(a, b, c, d)
for name, roots, true in zip(("b/a", "c/a", "d/a"), tr.reconstruct_ratio_triples(t), (b / a, c / a, d / a)):
    print(f"{name}: recovered {np.round(roots.as_array(), 10)}  direct {np.round(np.sort(true), 10)}")

# root order is lost, so w4^{abc} is known only up to the pairing of roots
print("w4 candidates:", np.round(tr.generalized_tringle_w4(t), 10))
print("w4(a, b, c)  :", round(w4(a, b, c), 10))
