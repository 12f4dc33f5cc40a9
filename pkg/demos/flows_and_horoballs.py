"""
Geodesic and horocycle flows on frames
======================================

Frames are PSL(2,R) matrices. The geodesic flow multiplies on the right by
a_t = diag(e^{t/2}, e^{-t/2}); the horocycle flow by n_s = [[1,0],[s,1]].
"""

import math

import numpy as np

from horokit.core import INFINITY, Point, Real, dist
from horokit.criteria import Side, in_cone, in_horoball_half
from horokit.flows import Frame, frame_dist, frame_from_endpoints, geodesic_flow, horocycle_flow

# the frame at i looking straight down: backward endpoint at infinity
v = frame_from_endpoints(INFINITY, Real(0.0), Point(0.0, 1.0))

# g^t h^s = h^{s e^t} g^t, checked on a few random frames
rng = np.random.default_rng(0)
worst = 0.0
for a, b, c, t, s in rng.uniform(-2, 2, size=(1000, 5)):
    f = horocycle_flow(geodesic_flow(Frame.identity(), a), b).translate(Frame.flip().m)
    worst = max(worst, frame_dist(geodesic_flow(horocycle_flow(f, s), t),
                                  horocycle_flow(geodesic_flow(f, t), s * math.exp(t))))
print(f"commutation defect over 1000 frames: {worst:.2e}")

# along the horocycle of v the basepoint slides horizontally at height 1
for s in (-2.0, 0.0, 3.0):
    b = horocycle_flow(v, s).basepoint
    print(f"h^{s:+.0f} v sits at ({b.x:+.3f}, {b.y:.3f}); distance from i {dist(b, v.basepoint):.4f} <= |s|")

# halves of the horoball y >= 10: the s >= 0 side of v is x <= 0
D = math.log(10.0)
for p in (Point(-5.0, 20.0), Point(5.0, 20.0), Point(-5.0, 2.0)):
    sides = [side.value for side in Side if in_horoball_half(v, D, p, side)]
    print(f"{p}: halves {sides or 'none'}, inside cone of width 1: {in_cone(v, 1.0, p)}")
