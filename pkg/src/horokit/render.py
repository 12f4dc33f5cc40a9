"""Hand-written SVG 1.1 scenes in the half-plane or disk model.

Coordinates are formatted with three decimals, so identical scenes give
byte-identical files.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field
from typing import Union

from .core import Geodesic, Horoball, HorokitError, IoError, Point, halfplane_to_disk
from .flows import Frame, geodesic_flow, horocycle_flow
from .schottky import SchottkySpec, enumerate_orbit

SIZE = 800.0
DISK_RADIUS = 380.0


class EmptyScene(HorokitError):
    pass


@dataclass(frozen=True)
class GeodesicItem:
    geodesic: Geodesic
    style: str = "geodesic"


@dataclass(frozen=True)
class HoroballItem:
    horoball: Horoball
    style: str = "horoball"


@dataclass(frozen=True)
class PointItem:
    point: Point
    style: str = "orbit"


@dataclass(frozen=True)
class HorocycleArc:
    frame: Frame
    s0: float
    s1: float
    style: str = "horocycle"


@dataclass(frozen=True)
class FrameArrow:
    frame: Frame
    length: float = 0.5
    style: str = "frame"


Drawable = Union[GeodesicItem, HoroballItem, PointItem, HorocycleArc, FrameArrow]


@dataclass
class Scene:
    items: list[Drawable] = field(default_factory=list)
    x_range: tuple[float, float] = (-110.0, 25.0)
    y_max: float = 60.0

    def add(self, item: Drawable) -> "Scene":
        self.items.append(item)
        return self


def scene_from_spec(spec: SchottkySpec, orbit_len: int = 0, **kw) -> Scene:
    """Paired circles (plus, then minus, per pair) and optionally orbit points."""
    scene = Scene(**kw)
    for pair in spec.pairs:
        scene.add(GeodesicItem(pair.plus.geodesic, "plus"))
        scene.add(GeodesicItem(pair.minus.geodesic, "minus"))
    if orbit_len > 0:
        for op in enumerate_orbit(spec, orbit_len):
            scene.add(PointItem(op.point))
    return scene


def _f(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


class _Halfplane:
    def __init__(self, scene: Scene):
        x0, x1 = scene.x_range
        if not x1 > x0:
            raise ValueError("empty x range")
        self.x0 = x0
        self.k = SIZE / (x1 - x0)
        self.y_max = scene.y_max
        self.width = SIZE
        self.height = scene.y_max * self.k

    def xy(self, z: complex) -> tuple[float, float]:
        return (z.real - self.x0) * self.k, self.height - z.imag * self.k

    def boundary(self) -> str:
        return f'<line class="boundary" x1="0.000" y1="{_f(self.height)}" x2="{_f(self.width)}" y2="{_f(self.height)}"/>'

    def geodesic(self, g: Geodesic, cls: str) -> str:
        if g.is_vertical:
            x, y = self.xy(complex(g.foot, 0.0))
            return f'<path class="{cls}" d="M {_f(x)} {_f(y)} L {_f(x)} 0.000"/>'
        lo, hi = sorted((g.e1.x, g.e2.x))
        (ax, ay), (bx, by) = self.xy(complex(lo, 0)), self.xy(complex(hi, 0))
        r = g.radius * self.k
        return f'<path class="{cls}" d="M {_f(ax)} {_f(ay)} A {_f(r)} {_f(r)} 0 0 1 {_f(bx)} {_f(by)}"/>'

    def circle(self, center: complex, radius: float, cls: str) -> str:
        x, y = self.xy(center)
        return f'<circle class="{cls}" cx="{_f(x)}" cy="{_f(y)}" r="{_f(radius * self.k)}"/>'

    def horoball(self, h: Horoball, cls: str) -> str:
        if h.base.is_infinity:
            _, y = self.xy(complex(0.0, h.anchor.y))
            return f'<rect class="{cls}" x="0.000" y="0.000" width="{_f(self.width)}" height="{_f(max(y, 0.0))}"/>'
        cy, rho = h.euclidean()
        return self.circle(complex(h.base.x, cy), rho, cls)


class _Disk:
    width = height = SIZE

    def xy(self, z: complex) -> tuple[float, float]:
        return SIZE / 2 + DISK_RADIUS * z.real, SIZE / 2 - DISK_RADIUS * z.imag

    def boundary(self) -> str:
        return f'<circle class="boundary" cx="{_f(SIZE / 2)}" cy="{_f(SIZE / 2)}" r="{_f(DISK_RADIUS)}"/>'

    def geodesic(self, g: Geodesic, cls: str) -> str:
        a, b = halfplane_to_disk(g.e1), halfplane_to_disk(g.e2)
        (ax, ay), (bx, by) = self.xy(a), self.xy(b)
        half = abs(cmath.phase(b / a)) / 2.0
        if abs(math.cos(half)) < 1e-12:
            return f'<path class="{cls}" d="M {_f(ax)} {_f(ay)} L {_f(bx)} {_f(by)}"/>'
        # circle orthogonal to the unit circle through a and b
        direction = (a + b) / abs(a + b)
        center = direction / math.cos(half)
        rho = math.tan(half)
        mid = center - rho * direction
        (cx, cy), (mx, my) = self.xy(center), self.xy(mid)
        cross = (ax - cx) * (my - cy) - (ay - cy) * (mx - cx)
        sweep = 1 if cross > 0 else 0
        r = rho * DISK_RADIUS
        return f'<path class="{cls}" d="M {_f(ax)} {_f(ay)} A {_f(r)} {_f(r)} 0 0 {sweep} {_f(bx)} {_f(by)}"/>'

    def circle(self, center: complex, radius: float, cls: str) -> str:
        x, y = self.xy(center)
        return f'<circle class="{cls}" cx="{_f(x)}" cy="{_f(y)}" r="{_f(radius * DISK_RADIUS)}"/>'

    def horoball(self, h: Horoball, cls: str) -> str:
        base = halfplane_to_disk(h.base)
        anchor = halfplane_to_disk(h.anchor)
        # a horocycle in the disk is a circle internally tangent at the base
        rho = abs(anchor - base) ** 2 / (2.0 * (1.0 - (anchor * base.conjugate()).real))
        return self.circle(base * (1.0 - rho), rho, cls)


def _point(model, p: Point) -> complex:
    return halfplane_to_disk(p) if isinstance(model, _Disk) else p.z


def _polyline(model, pts: list[Point], cls: str) -> str:
    coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in (model.xy(_point(model, p)) for p in pts))
    return f'<polyline class="{cls}" points="{coords}"/>'


_STYLE = (
    ".boundary{stroke:#000;fill:none;stroke-width:1}"
    ".geodesic,.plus,.minus,.axis{fill:none;stroke-width:1.2}"
    ".geodesic{stroke:#444}.plus{stroke:#c0392b}.minus{stroke:#2c6fbb}.axis{stroke:#888}"
    ".horoball{fill:#f4d03f;fill-opacity:0.25;stroke:#b7950b}"
    ".orbit{fill:#111}.horocycle{fill:none;stroke:#27ae60}.frame{fill:none;stroke:#8e44ad;stroke-width:2}"
)


def render_svg(scene: Scene, path: str | os.PathLike, model: str = "halfplane") -> None:
    if not scene.items:
        raise EmptyScene("nothing to draw")
    if model == "halfplane":
        m = _Halfplane(scene)
    elif model == "disk":
        m = _Disk()
    else:
        raise ValueError(f"unknown model {model!r}")
    body = [m.boundary()]
    for item in scene.items:
        if isinstance(item, GeodesicItem):
            body.append(m.geodesic(item.geodesic, item.style))
        elif isinstance(item, HoroballItem):
            body.append(m.horoball(item.horoball, item.style))
        elif isinstance(item, PointItem):
            x, y = m.xy(_point(m, item.point))
            body.append(f'<circle class="{item.style}" cx="{_f(x)}" cy="{_f(y)}" r="2.000"/>')
        elif isinstance(item, HorocycleArc):
            n = 64
            pts = [horocycle_flow(item.frame, item.s0 + (item.s1 - item.s0) * i / n).basepoint for i in range(n + 1)]
            body.append(_polyline(m, pts, item.style))
        elif isinstance(item, FrameArrow):
            pts = [item.frame.basepoint, geodesic_flow(item.frame, item.length).basepoint]
            body.append(_polyline(m, pts, item.style))
        else:
            raise TypeError(f"cannot draw {type(item).__name__}")
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(m.width)}" height="{_f(m.height)}" '
        f'viewBox="0 0 {_f(m.width)} {_f(m.height)}">\n'
        f'<defs><clipPath id="view"><rect x="0" y="0" width="{_f(m.width)}" height="{_f(m.height)}"/></clipPath></defs>\n'
        f"<style>{_STYLE}</style>\n"
        '<g clip-path="url(#view)">\n'
    )
    text = head + "\n".join(body) + "\n</g>\n</svg>\n"
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(str(exc)) from exc
