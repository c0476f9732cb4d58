# coding: utf-8
"""
==============================
Horns, fillers, and saturation
==============================

The one-vertex circle is not Kan: three inner and outer 2-horns have no
filler.  Bounded saturation attaches free fillers stage by stage; each
stage clears every horn present at its start and creates new ones, so the
residual report shrinks only relative to the horns it was asked about.

"""

# %%
# Finding the unfillable horns
# ----------------------------

from kanforge import circle, fibrant_approx_bounded, find_filler, kan_report, word_token

K = circle()
missing = kan_report(K, max_dim=2)
print(f"the circle has {len(missing)} unfillable 2-horns:")
for h in missing:
    faces = ", ".join(f"d{i}={word_token(w)}" for i, w in sorted(h.faces.items()))
    print(f"  horn (p={h.p}, k={h.k}): {faces}")

# %%
# Two stages of filling
# ---------------------
#
# Stage 1 fills the three horns above.  The fillers are new 2-cells, and
# together with the new cap 1-cells they spawn many fresh horns; stage 2
# clears the ones that appeared, and the residual report counts what the
# two new stages left open in dimension <= 3.

result = fibrant_approx_bounded(K, max_dim=3, stages=2)
for stage, attached in enumerate(result.attached_per_stage, start=1):
    print(f"stage {stage}: attached {len(attached)} fillers")
print(f"residual missing horns through dim 3: {len(result.residual)}")

# %%
# What the filling preserves
# --------------------------
#
# No new vertices ever appear (1-horns are filled by degeneracies), and the
# loop survives: the approximation keeps the fundamental group.

from kanforge import abelianized_pi1

L = result.complex
print(f"vertices before: {K.cell_ids(0)}  after: {L.cell_ids(0)}")
print(f"abelianized pi_1 after filling: {abelianized_pi1(L)}")

for h in missing:
    filler = find_filler(L, h)
    print(f"horn (p={h.p}, k={h.k}) now fills with {word_token(filler)}")

# %%
# A complex that is already Kan
# -----------------------------
#
# The classifying complex of a finite group fills every horn; the report
# comes back empty, which is the certificate the bundle machinery relies
# on.

from kanforge import cyclic, nerve_truncated

wbar = nerve_truncated(cyclic(2), max_dim=4)
print(f"unfillable horns of the Z/2 classifying complex through dim 3: "
      f"{len(kan_report(wbar, max_dim=3))}")
