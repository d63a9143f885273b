"""H3 in its isotropic basis: products, norms and the exponential form.

Run: python demos/01_hyper_algebra.py
"""
import math

import numpy as np

from polyangles.hyper import HyperNumber, exp_bingles, exp_bingles_metric_form, hc_apply, to_exponential

a = HyperNumber((2.0, 0.5, 3.0))
b = HyperNumber((1.0, 4.0, 0.25))

# multiplication is componentwise, so the cube norm is multiplicative
print("a * b        =", (a * b).components)
print("|a| |b|      =", abs(a) * abs(b), " |a b| =", abs(a * b))

# functions act componentwise as well; exp turns sums into products
print("exp(a)       =", np.round(hc_apply(math.exp, a).components, 6))

# every positive element is a norm times an exponential of two angles
f = to_exponential(a)
print(f"a = {f.norm:.6f} * exp({f.angles[0]:.6f} e1 + {f.angles[1]:.6f} e2)")
print("rebuilt      =", np.round(f.to_hyper().components, 12))

# the exponential bingles are differences of these angles: additive for
# every intermediate and unchanged by rescaling either vector
c = HyperNumber((0.7, 1.3, 5.0))
ab, ac, cb = exp_bingles(a, b), exp_bingles(a, c), exp_bingles(c, b)
print("phi(a,b)            =", np.round(ab, 12))
print("phi(a,c) + phi(c,b) =", np.round(np.add(ac, cb), 12))
print("phi(5a, 0.1b)       =", np.round(exp_bingles(a * 5.0, b * 0.1), 12))
print("metric form         =", np.round(exp_bingles_metric_form(a, b), 12))
