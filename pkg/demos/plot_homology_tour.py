# coding: utf-8
"""
=====================================
A homology tour of the small surfaces
=====================================

Three two-dimensional presentations - the torus, the Klein bottle, and the
sphere as the boundary of a 3-simplex - computed over the integers and over
Z/2, with the cup product table that tells the torus apart from the wedge
S^1 v S^1 v S^2.

"""

# %%
# The presentations
# -----------------
#
# Every complex is a finite dictionary: cells by dimension plus face words.
# The builders below return one-vertex models (products of the one-vertex
# circle), so the chain complexes are tiny.

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from kanforge import (
    Cochain,
    boundary_delta,
    cohomology,
    cup_product,
    homology,
    klein_bottle,
    torus,
)

spaces = {
    "torus": torus(),
    "klein bottle": klein_bottle(),
    "sphere": boundary_delta(3),
}
for name, K in spaces.items():
    counts = tuple(K.n_cells(d) for d in K.dims())
    print(f"{name}: cells by dimension {counts}, problems: {K.validate()}")

# %%
# Integral and mod-2 homology
# ---------------------------
#
# The Klein bottle is where the coefficients matter: torsion Z/2 appears in
# degree 1 over Z, and an extra class appears in degree 2 over Z/2.

for name, K in spaces.items():
    over_z = {n: str(h.group) for n, h in homology(K).items()}
    over_z2 = {n: str(h.group) for n, h in homology(K, coefficients=2).items()}
    print(f"{name}:")
    print(f"  H_* (Z)   = {over_z}")
    print(f"  H_* (Z/2) = {over_z2}")

# %%
# The cup product on the torus
# ----------------------------
#
# The two degree-1 generators square to zero and anticommute, so H^* is the
# exterior algebra on two generators.

T = spaces["torus"]
HC = cohomology(T)
H1, H2 = HC[1], HC[2]
a, b = (Cochain(T, 1, v) for v in H1.representatives())
table = [[H2.coords(cup_product(x, y).vector)[0] for y in (a, b)] for x in (a, b)]
print("cup product table on H^1 x H^1 (coordinates in H^2):")
print(f"  a*a = {table[0][0]}   a*b = {table[0][1]}")
print(f"  b*a = {table[1][0]}   b*b = {table[1][1]}")

# %%
# Betti numbers at a glance
# -------------------------

fig, ax = plt.subplots(figsize=(6, 3.2))
width = 0.25
for pos, (name, K) in enumerate(spaces.items()):
    H = homology(K)
    ranks = [H[n].group.rank for n in range(3)]
    ax.bar([n + (pos - 1) * width for n in range(3)], ranks, width, label=name)
ax.set_xticks(range(3))
ax.set_xticklabels([f"H{n}" for n in range(3)])
ax.set_ylabel("free rank")
ax.set_title("Betti numbers (torsion not shown)")
ax.legend()
fig.tight_layout()
fig.savefig("homology_tour.png", dpi=120)
print("wrote homology_tour.png")
