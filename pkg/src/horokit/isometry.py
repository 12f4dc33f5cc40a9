"""PSL(2, R) acting on the upper half-plane by homographies."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, overload

from .core import (
    INFINITY,
    AnyPoint,
    BoundaryPoint,
    Geodesic,
    HorokitError,
    NoIntersection,
    Point,
    Real,
    _tol,
    dist,
    intersection,
)


class IsIdentity(HorokitError):
    pass


class NotHyperbolic(HorokitError):
    pass


class DegenerateAxis(HorokitError):
    pass


class DegenerateLength(HorokitError):
    pass


class AxisMiss(HorokitError):
    pass


class Kind(enum.Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class Mobius:
    """z -> (az + b)/(cz + d) with ad - bc = 1, sign fixed so the first nonzero entry is positive.

    Build through :meth:`of` (which normalizes); the raw constructor trusts its input.
    """

    a: float
    b: float
    c: float
    d: float

    @classmethod
    def of(cls, a: float, b: float, c: float, d: float) -> "Mobius":
        det = a * d - b * c
        if not det > 0:
            raise ValueError(f"determinant {det} is not positive")
        s = 1.0 / math.sqrt(det)
        a, b, c, d = a * s, b * s, c * s, d * s
        for e in (a, b, c, d):
            if e != 0.0:
                if e < 0.0:
                    a, b, c, d = -a, -b, -c, -d
                break
        return cls(a + 0.0, b + 0.0, c + 0.0, d + 0.0)

    @classmethod
    def from_literal(cls, values: Sequence[float]) -> "Mobius":
        """Four reals, row-major."""
        if len(values) != 4:
            raise ValueError("a matrix literal has four entries")
        return cls.of(*(float(v) for v in values))

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def from_endpoints(cls, minus: BoundaryPoint, plus: BoundaryPoint, height: float = 1.0) -> "Mobius":
        """An element sending 0 to ``minus`` and infinity to ``plus``.

        ``height`` rescales first, so i is sent to the image of i*height.
        """
        if minus.is_infinity and plus.is_infinity:
            raise DegenerateAxis("endpoints coincide")
        if minus.is_infinity:
            m = cls.of(plus.x, -1.0, 1.0, 0.0)
        elif plus.is_infinity:
            m = cls.of(1.0, minus.x, 0.0, 1.0)
        else:
            if minus.x == plus.x:
                raise DegenerateAxis("endpoints coincide")
            if plus.x > minus.x:
                m = cls.of(plus.x, minus.x, 1.0, 1.0)
            else:
                m = cls.of(-plus.x, minus.x, -1.0, 1.0)
        if height != 1.0:
            h = math.sqrt(height)
            m = m @ cls(h, 0.0, 0.0, 1.0 / h)
        return m

    # group structure

    def __matmul__(self, other: "Mobius") -> "Mobius":
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return Mobius.of(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "Mobius":
        return Mobius.of(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "Mobius":
        base = self if n >= 0 else self.inverse()
        out = Mobius.identity()
        for _ in range(abs(n)):
            out = out @ base
        return out

    def conjugate(self, by: "Mobius") -> "Mobius":
        """by * self * by^-1"""
        return by @ self @ by.inverse()

    @property
    def trace(self) -> float:
        return self.a + self.d

    def isclose(self, other: "Mobius", tol: float | None = None) -> bool:
        tol = _tol(tol)
        u = (self.a, self.b, self.c, self.d)
        v = (other.a, other.b, other.c, other.d)
        scale = max(1.0, *map(abs, u), *map(abs, v))
        same = all(abs(x - y) <= tol * scale for x, y in zip(u, v))
        flipped = all(abs(x + y) <= tol * scale for x, y in zip(u, v))
        return same or flipped

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    # action

    @overload
    def __call__(self, z: Point) -> Point: ...

    @overload
    def __call__(self, z: BoundaryPoint) -> BoundaryPoint: ...

    def __call__(self, z):
        return self.apply(z)

    def apply(self, z):
        a, b, c, d = self.a, self.b, self.c, self.d
        if isinstance(z, Point):
            ex = c * z.x + d
            den = ex * ex + (c * z.y) ** 2
            re = ((a * z.x + b) * ex + a * c * z.y * z.y) / den
            return Point(re, z.y / den)
        if isinstance(z, BoundaryPoint):
            if z.is_infinity:
                x = math.inf if c == 0.0 else a / c
            else:
                den = c * z.x + d
                x = math.inf if den == 0.0 else (a * z.x + b) / den
            # a quotient that overflows is infinity to working precision
            return Real(x) if math.isfinite(x) else INFINITY
        if isinstance(z, Geodesic):
            return Geodesic(self.apply(z.e1), self.apply(z.e2))
        raise TypeError(f"cannot apply a Mobius map to {type(z).__name__}")


def apply(m: Mobius, z):
    return m.apply(z)


def classify(m: Mobius, tol: float | None = None) -> Kind:
    tol = _tol(tol)
    tr = abs(m.trace)
    if abs(tr - 2.0) <= tol:
        if abs(m.b) <= tol and abs(m.c) <= tol:
            return Kind.IDENTITY
        return Kind.PARABOLIC
    return Kind.ELLIPTIC if tr < 2.0 else Kind.HYPERBOLIC


def _negligible(c: float, m: Mobius) -> bool:
    return abs(c) <= 1e-14 * max(1.0, abs(m.a), abs(m.b), abs(m.d))


def axis(m: Mobius, tol: float | None = None) -> tuple[BoundaryPoint, BoundaryPoint]:
    """(repelling, attracting) fixed points of a hyperbolic element."""
    if classify(m, tol) is not Kind.HYPERBOLIC:
        raise NotHyperbolic(f"{m} is not hyperbolic")
    a, b, c, d = m.a, m.b, m.c, m.d
    if a + d < 0:
        a, b, c, d = -a, -b, -c, -d
    if _negligible(c, m):
        # z -> (a z + b)/d; infinity attracts when a > d
        finite = Real(b / (d - a))
        return (finite, INFINITY) if a > d else (INFINITY, finite)
    tr = a + d
    root = math.sqrt((tr - 2.0) * (tr + 2.0))
    # roots of c z^2 + (d - a) z - b = 0 without cancellation
    q = -0.5 * ((d - a) + math.copysign(root, d - a if d != a else 1.0))
    z1 = q / c
    z2 = -b / q if q != 0.0 else (a - d) / (2.0 * c)
    # attracting fixed point has |cz + d| > 1 (derivative 1/(cz+d)^2 < 1)
    if abs(c * z1 + d) > abs(c * z2 + d):
        return Real(z2), Real(z1)
    return Real(z1), Real(z2)


def fixed_points(m: Mobius, tol: float | None = None) -> tuple[BoundaryPoint, ...]:
    """Boundary fixed points: (repelling, attracting) for hyperbolic, one for parabolic, none for elliptic."""
    kind = classify(m, tol)
    if kind is Kind.IDENTITY:
        raise IsIdentity("every point is fixed by the identity")
    if kind is Kind.ELLIPTIC:
        return ()
    if kind is Kind.HYPERBOLIC:
        return axis(m, tol)
    if _negligible(m.c, m):
        return (INFINITY,)
    return (Real((m.a - m.d) / (2.0 * m.c)),)


def translation_length(m: Mobius, tol: float | None = None) -> float:
    if classify(m, tol) is not Kind.HYPERBOLIC:
        raise NotHyperbolic(f"{m} is not hyperbolic")
    return 2.0 * math.acosh(abs(m.trace) / 2.0)


def geodesic_matrix(t: float) -> Mobius:
    """a_t = diag(e^{t/2}, e^{-t/2})."""
    return Mobius(math.exp(t / 2.0), 0.0, 0.0, math.exp(-t / 2.0))


def horocycle_matrix(s: float) -> Mobius:
    """n_s = [[1, 0], [s, 1]]."""
    return Mobius.of(1.0, 0.0, s, 1.0)


def from_axis_length(p: BoundaryPoint, q: BoundaryPoint, length: float) -> Mobius:
    """Hyperbolic element repelling from p, attracting to q, translating by ``length``."""
    if p.isclose(q, 0.0):
        raise DegenerateAxis(f"axis endpoints coincide: {p}")
    if not length > 0:
        raise DegenerateLength("translation length must be positive")
    frame = Mobius.from_endpoints(p, q)
    return geodesic_matrix(length).conjugate(frame)


def _oriented_frame(g: Geodesic, base: Point, outside_left: bool) -> Mobius:
    c, r = g.center, g.radius
    start, end = (Real(c - r), Real(c + r)) if outside_left else (Real(c + r), Real(c - r))
    m = Mobius.from_endpoints(start, end)
    h = abs(m.inverse().apply(base).z)
    return Mobius.from_endpoints(start, end, h)


def pairing_isometry(p: BoundaryPoint, q: BoundaryPoint, A: Geodesic, B: Geodesic,
                     tol: float | None = None) -> Mobius:
    """Orientation-preserving map carrying A onto B, outside of A into the disk of B.

    The geodesic (p, q) selects the crossing points P = (p,q) n A and
    N = (p,q) n B, and the result sends P to N. When (p, q) meets A and B
    at equal oriented angles this is the translation along (p, q) by
    d(P, N); otherwise its fixed points move off p and q.
    """
    if A.is_vertical or B.is_vertical:
        raise ValueError("paired geodesics must be bounded semicircles")
    line = Geodesic(p, q)
    try:
        P = intersection(line, A)
        N = intersection(line, B)
    except NoIntersection as exc:
        raise AxisMiss(str(exc)) from None
    if dist(P, N) <= _tol(tol):
        raise DegenerateLength("crossing points coincide")
    fa = _oriented_frame(A, P, outside_left=True)
    fb = _oriented_frame(B, N, outside_left=False)
    return fb @ fa.inverse()
