"""
Empirical constants for thin triangles and flow comparisons
===========================================================

Every estimate is a seeded running extremum, so more samples can only push
an upper constant up or a lower constant down.
"""

import math

from horokit.lemma_lab import (
    estimate_thin_constant, verify_flow_lemmas, verify_inner_triangle, verify_reciprocal,
)

# defect and distance to the opposite side, angle at a bounded below
for alpha0 in (math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2):
    e = estimate_thin_constant(alpha0, 100_000, 42)
    print(f"alpha0={alpha0:.3f}: defect {e.components['defect']:.4f}, thinness {e.components['thinness']:.4f}")
print(f"right angle: defect tends to ln 2 = {math.log(2):.4f}; bound ln 4 = {math.log(4):.4f}")

# a vertex close to the opposite side sees it at a large angle only if the sides are long
for k in (0.5, 1.0, 2.0):
    r = verify_reciprocal(k, 50_000, 42)
    print(f"k={k}: min angle {r.alpha_hat:.2e} (any sides), {r.alpha_hat_far:.4f} (sides >= {r.d_hat})")

# inner triangles of horocyclic pairs stay small
e = verify_inner_triangle(5_000, 42)
print(f"inner triangle diameter <= {e.estimate:.4f} (2 ln phi = {2 * math.log((1 + 5 ** .5) / 2):.4f}), "
      f"chain residual {e.components['chain_residual']:.1e}")

for alpha0 in (math.pi / 6, math.pi / 3, math.pi / 2):
    r = verify_flow_lemmas(5_000, 42, alpha0)
    print(f"alpha0={alpha0:.3f}: d(I_v, I_w) <= {r.max_IvIw:.4f} against C={r.C_hat:.4f}; "
          f"{r.accepted} configurations, {r.upper_violations} upper-bound failures")
