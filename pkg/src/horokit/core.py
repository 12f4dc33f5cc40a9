"""Upper half-plane geometry: points, boundary points, geodesics, horoballs.

Everything is computed in the upper half-plane. The Poincare disk only
appears through :func:`disk_to_halfplane` and :func:`halfplane_to_disk`.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from typing import Optional, Union

DEFAULT_TOL = float(os.environ.get("HOROKIT_TOL", "1e-9"))


class HorokitError(Exception):
    """Base class for every error raised by the package."""


class NoIntersection(HorokitError):
    pass


class IoError(HorokitError):
    pass


def _tol(tol):
    return DEFAULT_TOL if tol is None else tol


@dataclass(frozen=True)
class Point:
    """A point x + iy of the upper half-plane."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")
        if not self.y > 0:
            raise ValueError(f"point ({self.x}, {self.y}) is not in the upper half-plane")

    @classmethod
    def from_complex(cls, z: complex) -> "Point":
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class BoundaryPoint:
    """A point of R u {infinity}; ``x is None`` encodes infinity."""

    x: Optional[float] = None

    def __post_init__(self):
        if self.x is not None and not math.isfinite(self.x):
            raise ValueError("use INFINITY for the point at infinity")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def isclose(self, other: "BoundaryPoint", tol: float | None = None) -> bool:
        tol = _tol(tol)
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return abs(self.x - other.x) <= tol * max(1.0, abs(self.x), abs(other.x))

    def __repr__(self):
        return "Infinity" if self.x is None else f"Real({self.x!r})"


def Real(x: float) -> BoundaryPoint:
    return BoundaryPoint(float(x))


INFINITY = BoundaryPoint(None)

AnyPoint = Union[Point, BoundaryPoint]


@dataclass(frozen=True)
class Geodesic:
    """Unoriented geodesic given by two distinct boundary endpoints.

    Internally either a vertical line (one endpoint at infinity) or a
    semicircle centred on the real axis.
    """

    e1: BoundaryPoint
    e2: BoundaryPoint

    def __post_init__(self):
        if self.e1.is_infinity and self.e2.is_infinity:
            raise ValueError("geodesic endpoints must be distinct")
        if not (self.e1.is_infinity or self.e2.is_infinity) and self.e1.x == self.e2.x:
            raise ValueError("geodesic endpoints must be distinct")

    @property
    def endpoints(self) -> tuple[BoundaryPoint, BoundaryPoint]:
        return self.e1, self.e2

    @property
    def is_vertical(self) -> bool:
        return self.e1.is_infinity or self.e2.is_infinity

    @property
    def foot(self) -> float:
        """Abscissa of a vertical geodesic."""
        return self.e2.x if self.e1.is_infinity else self.e1.x

    @property
    def center(self) -> float:
        return 0.5 * (self.e1.x + self.e2.x)

    @property
    def radius(self) -> float:
        return 0.5 * abs(self.e1.x - self.e2.x)

    def contains(self, p: Point, tol: float | None = None) -> bool:
        return dist_to_geodesic(p, self) <= _tol(tol)

    def same_as(self, other: "Geodesic", tol: float | None = None) -> bool:
        a, b = self.endpoints
        c, d = other.endpoints
        return (a.isclose(c, tol) and b.isclose(d, tol)) or (a.isclose(d, tol) and b.isclose(c, tol))


@dataclass(frozen=True)
class Horoball:
    """Horoball based at ``base`` whose bounding horocycle passes through ``anchor``.

    Membership is the super-level set ``busemann(base, anchor, p) >= 0``.
    """

    base: BoundaryPoint
    anchor: Point

    def contains(self, p: Point, tol: float | None = None) -> bool:
        return busemann(self.base, self.anchor, p) >= -_tol(tol)

    def euclidean(self) -> tuple[float, float]:
        """(center ordinate, radius) of the Euclidean disk; base must be real."""
        if self.base.is_infinity:
            raise ValueError("horoball at infinity is a half-plane")
        dx = self.anchor.x - self.base.x
        rho = (dx * dx + self.anchor.y ** 2) / (2.0 * self.anchor.y)
        return rho, rho


def dist(p: Point, q: Point) -> float:
    # 2 asinh form stays accurate for nearby points
    dx = p.x - q.x
    dy = p.y - q.y
    return 2.0 * math.asinh(math.hypot(dx, dy) / (2.0 * math.sqrt(p.y * q.y)))


def busemann(xi: BoundaryPoint, p: Point, q: Point) -> float:
    """lim_{z -> xi} d(p, z) - d(q, z); positive when q is deeper toward xi."""
    if xi.is_infinity:
        return math.log(q.y / p.y)
    ap = (p.x - xi.x) ** 2 + p.y ** 2
    aq = (q.x - xi.x) ** 2 + q.y ** 2
    return math.log(q.y * ap / (p.y * aq))


def disk_to_halfplane(z: complex, tol: float | None = None) -> AnyPoint:
    """Cayley map z -> i(1+z)/(1-z); boundary points go to BoundaryPoint."""
    z = complex(z)
    r = abs(z)
    tol = _tol(tol)
    if r > 1.0 + tol:
        raise ValueError(f"{z} lies outside the closed unit disk")
    if abs(r - 1.0) <= tol:
        if abs(z - 1.0) <= tol:
            return INFINITY
        # i(1+e^{it})/(1-e^{it}) = -cot(t/2)
        return Real((-2.0 * z.imag) / abs(1.0 - z) ** 2 + 0.0)
    w = 1j * (1.0 + z) / (1.0 - z)
    return Point(w.real, w.imag)


def halfplane_to_disk(p: AnyPoint) -> complex:
    """Inverse Cayley map w -> (w - i)/(w + i)."""
    if isinstance(p, BoundaryPoint):
        if p.is_infinity:
            return complex(1.0, 0.0)
        w = complex(p.x, 0.0)
    else:
        w = p.z
    return (w - 1j) / (w + 1j)


def dist_to_geodesic(p: Point, g: Geodesic) -> float:
    if g.is_vertical:
        return math.asinh(abs(p.x - g.foot) / p.y)
    lo, hi = sorted((g.e1.x, g.e2.x))
    L = hi - lo
    # |(x-lo)(x-hi) + y^2| / (y L), scaled by L first so huge circles do not overflow
    return math.asinh(abs((p.x - lo) * ((p.x - hi) / L) + p.y * (p.y / L)) / p.y)


def reflect(p: Point, g: Geodesic) -> Point:
    """Reflection of p across the geodesic g (an isometric involution)."""
    if g.is_vertical:
        return Point(2.0 * g.foot - p.x, p.y)
    c, r = g.center, g.radius
    w = p.z - c
    w = r * r * w / abs(w) ** 2
    return Point(c + w.real, w.imag)


def _interleaved(g1: Geodesic, g2: Geodesic) -> bool:
    if g1.is_vertical and g2.is_vertical:
        return False
    if g2.is_vertical:
        g1, g2 = g2, g1
    if g1.is_vertical:
        a = g1.foot
        if g2.is_vertical:
            return False
        return (g2.e1.x - a) * (g2.e2.x - a) < 0.0
    a1, a2 = sorted((g1.e1.x, g1.e2.x))
    b1, b2 = sorted((g2.e1.x, g2.e2.x))
    return (a1 < b1 < a2 < b2) or (b1 < a1 < b2 < a2)


def intersection(g1: Geodesic, g2: Geodesic) -> Point:
    """The crossing point of two geodesics; NoIntersection if they do not cross."""
    if not _interleaved(g1, g2):
        raise NoIntersection(f"{g1} and {g2} do not cross")
    if g2.is_vertical:
        g1, g2 = g2, g1
    if g1.is_vertical:
        a = g1.foot
        c, r = g2.center, g2.radius
        dx = a - c
        return Point(a, math.sqrt((r - dx) * (r + dx)))
    c1, r1 = g1.center, g1.radius
    c2, r2 = g2.center, g2.radius
    x = 0.5 * (c1 + c2) + (r1 - r2) * (r1 + r2) / (2.0 * (c2 - c1))
    dx = x - c1
    if abs(x - c2) < abs(dx):
        dx, r1 = x - c2, r2
    return Point(x, math.sqrt((r1 - dx) * (r1 + dx)))


def angle_between(g1: Geodesic, g2: Geodesic) -> float:
    """Acute (or right) crossing angle in (0, pi/2]."""
    if not _interleaved(g1, g2):
        raise NoIntersection(f"{g1} and {g2} do not cross")
    if g2.is_vertical:
        g1, g2 = g2, g1
    if g1.is_vertical:
        cos = abs(g2.center - g1.foot) / g2.radius
    else:
        c1, r1 = g1.center, g1.radius
        c2, r2 = g2.center, g2.radius
        cos = abs(r1 * r1 + r2 * r2 - (c1 - c2) ** 2) / (2.0 * r1 * r2)
    return math.acos(min(cos, 1.0))


def geodesic_through(p: Point, q: AnyPoint) -> Geodesic:
    """The geodesic through p and q (q a point or a boundary point).

    Circles too large to represent collapse to the vertical line.
    """
    if isinstance(q, BoundaryPoint):
        if q.is_infinity or q.x == p.x:
            return Geodesic(Real(p.x), INFINITY)
        dx = p.x - q.x
        other = p.x + p.y * (p.y / dx)
        if not math.isfinite(other) or other == q.x:
            return Geodesic(q, INFINITY)
        return Geodesic(q, Real(other))
    if p.x == q.x:
        return Geodesic(Real(p.x), INFINITY)
    c = 0.5 * (p.x + q.x) + (p.y - q.y) * ((p.y + q.y) / (2.0 * (p.x - q.x)))
    r = math.hypot(p.x - c, p.y)
    if not (math.isfinite(c) and math.isfinite(r)) or c - r == c + r:
        return Geodesic(Real(0.5 * (p.x + q.x)), INFINITY)
    return Geodesic(Real(c - r), Real(c + r))


def endpoint_beyond(p: Point, q: Point) -> BoundaryPoint:
    """Endpoint of the geodesic through p, q reached by moving from p past q."""
    g = geodesic_through(p, q)
    if g.is_vertical:
        return INFINITY if q.y > p.y else Real(p.x)
    lo, hi = sorted((g.e1.x, g.e2.x))
    return Real(hi) if q.x > p.x else Real(lo)


def point_toward(p: Point, target: AnyPoint, s: float) -> Point:
    """Point at distance s from p along the geodesic ray toward ``target``."""
    if isinstance(target, Point) and target == p:
        return p
    # move p to i by z -> (z - p.x)/p.y; the ray leaves i at angle psi from vertical
    if isinstance(target, BoundaryPoint) and target.is_infinity:
        u = 1.0 + 0j
    else:
        t = complex((target.x - p.x) / p.y, target.y / p.y if isinstance(target, Point) else 0.0)
        w = (t - 1j) / (t + 1j)
        u = w / abs(w)
    # rotation by psi about i is [[c, sn], [-sn, c]] with c + i sn = e^{i psi/2}
    half = cmath.sqrt(u)
    c, sn = half.real, half.imag
    if sn == 0.0:
        return Point(p.x, p.y * math.exp(s))
    # image of i e^s, divided through by e^{2s} so large s cannot overflow
    e = math.exp(-s)
    den = sn * sn + c * c * e * e
    x = -c * sn * -math.expm1(-2.0 * s) / den
    y = e / den
    return Point(p.x + p.y * x, p.y * y)
