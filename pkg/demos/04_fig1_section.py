"""Plane section of the conic coplanarity surface for xi = (1, 1, 1).

The curve has an isolated real point at the origin.  Writes fig1.csv and,
when matplotlib is available, fig1.png.

Run: python demos/04_fig1_section.py [xi1,xi2,xi3]
"""
import sys

import numpy as np

from polyangles.bingles import fig1_section, section_residual

xi = tuple(float(t) for t in sys.argv[1].split(",")) if len(sys.argv) > 1 else (1.0, 1.0, 1.0)
pts = fig1_section(xi)
res = np.array([section_residual(u, v, xi) for u, v in pts])
near = pts[np.argmin(np.hypot(pts[:, 0], pts[:, 1]))]
print(f"{len(pts)} points, max |residual| = {np.abs(res).max():.2e}")
print("point nearest the origin:", near)
np.savetxt("fig1.csv", pts, delimiter=",", header="u,v", comments="", fmt="%.12g")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)
fig, ax = plt.subplots(figsize=(5, 5))
ax.plot(pts[:, 0], pts[:, 1], ".", ms=1)
ax.set_xlabel("u")
ax.set_ylabel("v")
ax.set_title(f"xi = {xi}")
ax.set_aspect("equal")
fig.savefig("fig1.png", dpi=120)
print("wrote fig1.png")
