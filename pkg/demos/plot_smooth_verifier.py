# coding: utf-8
"""
===================================
Grid checks of the smooth formulas
===================================

The closed-form maps - the horn retraction, the vertex collapse, and the
edge-taming composite - are verified on dense barycentric grids.  The
plateaus are exact in floating point (error 0.0, not merely small), which
is what makes the downstream identities testable at 1e-12.

"""

# %%
# The retraction onto the horn
# ----------------------------
#
# Fold the triangle across the median, then collapse epsilon-collars near
# the vertices.  Every grid point lands exactly on the union of the two
# edges, and applying the map twice moves nothing beyond 1e-10.

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from kanforge import smooth

eps0 = 0.2
pts = smooth.barycentric_grid(120)
image = smooth.retraction_r(pts, eps0)
print(f"horn membership error: {np.max(smooth.horn_membership_error(image)):.3e}")
print(f"idempotence error:     {np.max(np.abs(smooth.retraction_r(image, eps0) - image)):.3e}")

# %%
# Where points travel
# -------------------
#
# Plot each grid point in the plane, colored by how far the retraction
# moves it.  The fixed set (the horn itself, darkest) is visible along the
# two edges x0 = 0 and x2 = 0.


def to_xy(bary):
    # orthographic coordinates of the standard triangle
    x = bary[..., 1] + 0.5 * bary[..., 2]
    y = np.sqrt(3.0) / 2.0 * bary[..., 2]
    return x, y


moved = np.linalg.norm(image - pts, axis=-1)
fig, ax = plt.subplots(figsize=(5, 4.3))
x, y = to_xy(pts)
sc = ax.scatter(x, y, c=moved, s=4, cmap="viridis")
fig.colorbar(sc, label="displacement")
ax.set_aspect("equal")
ax.set_title("retraction onto the 1-horn")
fig.tight_layout()
fig.savefig("retraction_displacement.png", dpi=120)
print("wrote retraction_displacement.png")

# %%
# Taming a loop
# -------------
#
# The composite of a loop with the fold-and-collapse data is constant near
# the endpoints of the middle face: a smooth loop becomes one that can be
# glued.  Plot the reparametrization against the identity to see the
# plateaus.

t = np.linspace(0.0, 1.0, 401)
mu = smooth.bump_mu(t)
fig, ax = plt.subplots(figsize=(5, 3.4))
ax.plot(t, t, "--", label="identity")
ax.plot(t, mu, label="cutoff reparametrization")
lo, hi = smooth.MU_WINDOW
ax.axvspan(0.0, lo, color="0.9")
ax.axvspan(hi, 1.0, color="0.9")
ax.legend()
ax.set_xlabel("t")
ax.set_title("plateaus are exactly flat")
fig.tight_layout()
fig.savefig("taming_plateaus.png", dpi=120)
print("wrote taming_plateaus.png")


def sigma(s):
    s = np.asarray(s, dtype=float)
    return np.stack([np.cos(2 * np.pi * s), np.sin(2 * np.pi * s)], axis=-1)


comp = smooth.taming_composite(sigma)
middle = comp(smooth.coface(1, t))
print(f"middle face tame: {smooth.tameness_check(t, middle, lo)}")
print(f"first face constant at sigma(1): "
      f"{np.max(np.abs(comp(smooth.coface(0, t)) - sigma(1.0))):.3e}")
print(f"last face still the original loop: "
      f"{np.max(np.abs(comp(smooth.coface(2, t)) - sigma(t))):.3e}")

# %%
# The vertex collapse and its extension
# -------------------------------------
#
# psi^2 crushes a neighborhood of each vertex to that vertex and is the
# identity outside the bump supports; because of the collapsed zones it
# extends over the whole plane {sum = 1}, frozen on the wedges beyond each
# vertex and ray-constant over the strips beyond each face.

collapsed = smooth.psi2(pts, eps0)
for i in range(3):
    zone = smooth.vertex_zone(pts, i, eps0 / 2.0)
    vertex = np.zeros(3)
    vertex[i] = 1.0
    err = np.max(np.abs(collapsed[zone] - vertex))
    print(f"vertex {i}: {int(zone.sum())} zone points collapse with error {err:.1e}")

ext = smooth.sigma_extension(lambda z: smooth.psi2(np.asarray(z, float), eps0), eps0=eps0)
outside = np.array([1.8, -0.5, -0.3])
print(f"extension at {outside.tolist()} equals the frozen vertex value: "
      f"{np.max(np.abs(ext(outside) - smooth.psi2(np.array([1.0, 0.0, 0.0]), eps0))):.3e}")
