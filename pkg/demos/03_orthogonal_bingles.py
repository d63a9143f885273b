"""Bingles additive through 3-orthogonal intermediates.

With c = (k/a) x (a o b) the trilinear form bm3(a, b, c) vanishes.  For
k1 = k2 = k3 and pairs with w2 = 0 the log bingle ln(1 + x/9) - ln 4 of
x = w1^3/w3 satisfies Phi(x) = Phi(0) + Phi(4x + 27).

Run: python demos/03_orthogonal_bingles.py
"""
import numpy as np

from polyangles import bingles as bg
from polyangles.invariants import pair_invariants
from polyangles.metric import inv_vec, ortho3_residual

a = np.array([1.0, 2.0, -1.5])
xi1, xi2 = 2.0, 3.0
xi = np.array([xi1, xi2, -xi1 * xi2 / (xi1 + xi2)])  # w2 = 0
b = xi * a
c = bg.intermediate_orthogonal(a, b, (1.0, 1.0, 1.0))
print("c =", c)
print("bm3-orthogonality residual:", ortho3_residual(a, b, c))
print("Euclidean dot with 1/a    :", float(np.dot(c, inv_vec(a))))

x = [pair_invariants(p, q).w1 ** 3 / pair_invariants(p, q).w3 for p, q in ((a, b), (a, c), (b, c))]
print("x_ab, x_ac, x_bc =", x, " 4 x_ab + 27 =", 4 * x[0] + 27)
phi = bg.ortho_log_phi
print("Phi(x_ab) =", phi(x[0]), " Phi(x_ac) + Phi(x_bc) =", phi(x[1]) + phi(x[2]))
print("ortho_bingle_log(a, b) =", bg.ortho_bingle_log(a, b))

# the linear fractional family: Phi(psi(x)) = Phi(x) - Phi(0)
m = bg.MoebiusParams(1.5, -0.5, 0.25, 2.0)
for t in (-3.0, 0.5, 7.0):
    print(f"x={t:+.1f}  Phi(psi(x))={m(bg.psi_moebius(t, m)):+.15f}  Phi(x)-Phi(0)={m(t) - m(0.0):+.15f}")
