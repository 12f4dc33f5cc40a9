"""
A Schottky group with one-sided boundary behaviour
==================================================

Builds the paired-circle group with plus circles of radius 1 at 2n+1 and
minus circles of radius n at -n^2, checks ping-pong, prints the per-generator
table and writes both SVG pictures next to this script.
"""

import math
import sys
from pathlib import Path

from horokit.counterexample import (
    CounterexampleConfig, Schedule, Variant, build, one_sidedness_certificate, report,
)
from horokit.isometry import axis
from horokit.render import scene_from_spec, render_svg
from horokit.schottky import one_sided_accumulation

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).with_name("out")
out.mkdir(exist_ok=True)

# ten generators; build raises if any disk overlaps or a map misses its target
config = CounterexampleConfig(Variant.TANGENT, Schedule.linear(), 10)
spec = build(config)
print(f"{len(spec)} generators, ping-pong holds: {spec.certificate.ok}")

# one row per generator: crossing points, translation length, where o lands
print(f"{'n':>3} {'x_n':>5} {'ell_n':>8} {'Im g.o':>10} {'d(o,P_n)':>9} {'theta_n':>8}")
for r in report(config):
    print(f"{r.n:3d} {r.x_n:5.0f} {r.ell_n:8.4f} {r.im_gamma_o:10.3e} {r.d_o_Pn:9.4f} {r.theta_n:8.4f}")

# fixed points sit just inside the circles, never exactly at their centers
for n in (1, 5, 10):
    rep, att = axis(spec.generator(n))
    print(f"g{n}: repels from {rep.x:.4f} (center {2 * n + 1}), attracts to {att.x:.4f} (center {-n * n})")

# the extreme limit points are the fixed points of the last generator
sup, inf = one_sided_accumulation(spec, 2)
print(f"limit-set samples span [{inf:.4f}, {sup:.4f}]")

# how many orbit points reach depth 1 in each half of the horoball at infinity
c = one_sidedness_certificate(config, 1.0, 1.0, 2)
print(f"census D=1 R=1: plus {c.plus_count}, minus {c.minus_count} -> {c.status}")

for model in ("halfplane", "disk"):
    path = out / f"group_{model}.svg"
    render_svg(scene_from_spec(spec, orbit_len=2), path, model)
    print("wrote", path)
