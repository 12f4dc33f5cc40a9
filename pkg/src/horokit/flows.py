"""Unit tangent bundle as PSL(2, R); geodesic and horocycle flows act on the right.

A frame ``m`` has basepoint m(i), backward endpoint v- = m(0) and forward
endpoint v+ = m(infinity). The geodesic flow a_t pushes the basepoint toward
v+, and the horocycle flow n_s keeps v- fixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import INFINITY, BoundaryPoint, Geodesic, HorokitError, Point, Real, _tol, dist, dist_to_geodesic
from .isometry import Mobius, geodesic_matrix, horocycle_matrix

I = Point(0.0, 1.0)
_AHEAD = Point(0.0, math.e)  # i pushed forward by unit geodesic time


class OffGeodesic(HorokitError):
    pass


@dataclass(frozen=True)
class Frame:
    m: Mobius

    @classmethod
    def identity(cls) -> "Frame":
        return cls(Mobius.identity())

    @classmethod
    def flip(cls) -> "Frame":
        """The frame at i pointing down: v- = infinity, v+ = 0."""
        return cls(Mobius.of(0.0, -1.0, 1.0, 0.0))

    @property
    def basepoint(self) -> Point:
        return self.m.apply(I)

    @property
    def minus(self) -> BoundaryPoint:
        return self.m.apply(Real(0.0))

    @property
    def plus(self) -> BoundaryPoint:
        return self.m.apply(INFINITY)

    def endpoints(self) -> tuple[BoundaryPoint, BoundaryPoint]:
        return self.minus, self.plus

    def translate(self, g: Mobius) -> "Frame":
        """Left action g . f."""
        return Frame(g @ self.m)


def geodesic_flow(f: Frame, t: float) -> Frame:
    return Frame(f.m @ geodesic_matrix(t))


def horocycle_flow(f: Frame, s: float) -> Frame:
    return Frame(f.m @ horocycle_matrix(s))


def endpoints(f: Frame) -> tuple[BoundaryPoint, BoundaryPoint]:
    return f.endpoints()


def frame_from_endpoints(minus: BoundaryPoint, plus: BoundaryPoint, base: Point,
                         tol: float | None = None) -> Frame:
    off = dist_to_geodesic(base, Geodesic(minus, plus))
    if off > _tol(tol):
        raise OffGeodesic(f"{base} is {off:.3g} away from the geodesic ({minus}, {plus})")
    m = Mobius.from_endpoints(minus, plus)
    h = abs(m.inverse().apply(base).z)
    return Frame(Mobius.from_endpoints(minus, plus, h))


def frame_dist(f: Frame, g: Frame) -> float:
    """Left-invariant metric on frames.

    Mean of the displacement of the basepoint and of the point one unit
    ahead along the geodesic. Both are isometry-invariant point distances,
    so the result is a genuine metric, and it reduces to |t| between a
    frame and its geodesic push by t.
    """
    h = f.m.inverse() @ g.m
    return 0.5 * (dist(I, h.apply(I)) + dist(_AHEAD, h.apply(_AHEAD)))


def dist_to_backward_ray(f: Frame, p: Point) -> float:
    """Distance from p to the ray (g^{-t} f)_{t >= 0}."""
    q = f.m.inverse().apply(p)
    # the ray is the segment (0, i] of the imaginary axis
    if q.x * q.x + q.y * q.y <= 1.0:
        return math.asinh(abs(q.x) / q.y)
    return dist(q, I)


def frame_points(frames) -> tuple[np.ndarray, np.ndarray]:
    """Basepoints and unit-ahead points of a sequence of frames, as complex arrays."""
    mats = np.array([f.m.as_tuple() for f in frames], dtype=float).reshape(-1, 4)
    return _images(mats, 1j), _images(mats, 1j * math.e)


def _images(mats: np.ndarray, z: complex) -> np.ndarray:
    a, b, c, d = mats.T
    return (a * z + b) / (c * z + d)


def pairwise_dist(z: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Hyperbolic distances between complex arrays (broadcasting)."""
    return 2.0 * np.arcsinh(np.abs(z - w) / (2.0 * np.sqrt(z.imag * w.imag)))
