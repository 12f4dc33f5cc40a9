"""Seeded sampling checks of comparison inequalities for hyperbolic triangles and flows.

Triangles are parametrized by the two sides at a vertex a and the angle
there. The third side, the defect and the distance from a to the opposite
side come from hyperbolic trigonometry, which stays accurate for sides of
length 30 where coordinates would not. Ideal vertices are replaced by
finite ones at distance :data:`IDEAL_SURROGATE`.

Every sampler draws its uniforms as one ``(samples, k)`` matrix, so a run
with fewer samples sees a prefix of a longer run with the same seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .core import (
    INFINITY,
    AnyPoint,
    BoundaryPoint,
    Geodesic,
    HorokitError,
    Point,
    Real,
    angle_between,
    busemann,
    disk_to_halfplane,
    dist,
    intersection,
    point_toward,
)
from .flows import Frame, dist_to_backward_ray, horocycle_flow
from .isometry import Mobius, from_axis_length

IDEAL_SURROGATE = 30.0
SIDE_RANGE = (0.1, 20.0)
IDEAL_RATE = 0.1


class BisectionFailure(HorokitError):
    pass


class RootSearchFailure(HorokitError):
    pass


@dataclass(frozen=True)
class TriangleSample:
    a: AnyPoint
    b: AnyPoint
    c: AnyPoint
    vertex_angle_at_a: float


@dataclass(frozen=True)
class ConstantEstimate:
    parameter: float
    estimate: float
    samples: int
    seed: int
    components: dict = field(default_factory=dict, compare=False)


def _log_uniform(u: np.ndarray, lo: float, hi: float) -> np.ndarray:
    return np.exp(np.log(lo) + u * (np.log(hi) - np.log(lo)))


def opposite_side(lb, lc, theta):
    """Length of bc from the sides ab = lb, ac = lc and the angle theta at a."""
    lb, lc, theta = np.asarray(lb, float), np.asarray(lc, float), np.asarray(theta, float)
    # cancellation-free law of cosines
    ch = np.cosh(lb - lc) + 2.0 * np.sinh(lb) * np.sinh(lc) * np.sin(theta / 2.0) ** 2
    return np.arccosh(np.maximum(ch, 1.0))


def defect(lb, lc, theta):
    return np.asarray(lb) + np.asarray(lc) - opposite_side(lb, lc, theta)


def dist_to_opposite_side(lb, lc, theta):
    """Distance from a to the segment [b, c]."""
    lb, lc, theta = np.asarray(lb, float), np.asarray(lc, float), np.asarray(theta, float)
    bc = opposite_side(lb, lc, theta)
    with np.errstate(invalid="ignore", divide="ignore"):
        sh = np.sinh(lb) * np.sinh(lc) * np.sin(theta) / np.sinh(bc)
    h = np.arcsinh(np.where(bc > 0, sh, 0.0))
    # foot of the perpendicular lies on the segment iff neither base angle is obtuse
    cb, cc, cbc = np.cosh(lb), np.cosh(lc), np.cosh(bc)
    inside = (cb * cbc >= cc) & (cc * cbc >= cb)
    return np.where(inside, h, np.minimum(lb, lc))


def sample_triangle(lb: float, lc: float, theta: float, ideal_b: bool = False,
                    ideal_c: bool = False) -> TriangleSample:
    """Realize a triangle in the half-plane: a = i, b straight up, c turned by theta."""
    a = Point(0.0, 1.0)
    b: AnyPoint = INFINITY if ideal_b else Point(0.0, math.exp(lb))
    direction = complex(math.cos(theta), math.sin(theta))
    c = disk_to_halfplane(direction if ideal_c else math.tanh(lc / 2.0) * direction)
    return TriangleSample(a, b, c, theta)


def _thin_draw(rng_rows: np.ndarray, alpha0: float):
    lb = _log_uniform(rng_rows[:, 0], *SIDE_RANGE)
    lc = _log_uniform(rng_rows[:, 1], *SIDE_RANGE)
    theta = alpha0 + rng_rows[:, 2] * (math.pi - alpha0)
    lb = np.where(rng_rows[:, 3] < IDEAL_RATE, IDEAL_SURROGATE, lb)
    lc = np.where(rng_rows[:, 4] < IDEAL_RATE, IDEAL_SURROGATE, lc)
    return lb, lc, theta


def estimate_thin_constant(alpha0: float, samples: int, seed: int) -> ConstantEstimate:
    """Largest defect or distance to the opposite side over triangles with angle >= alpha0 at a."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not 0.0 < alpha0 <= math.pi:
        raise ValueError("alpha0 must lie in (0, pi]")
    rows = np.random.default_rng(seed).random((samples, 5))
    lb, lc, theta = _thin_draw(rows, alpha0)
    d = float(defect(lb, lc, theta).max())
    t = float(dist_to_opposite_side(lb, lc, theta).max())
    return ConstantEstimate(alpha0, max(d, t), samples, seed, {"defect": d, "thinness": t})


@dataclass(frozen=True)
class ReciprocalReport:
    alpha_hat: float
    d_hat: float
    violations: tuple[int, ...]
    C_hat: float
    alpha_hat_far: float  # also requiring d(a,b), d(a,c) >= d_hat
    accepted: int
    excluded: int  # close to [b,c] but with d(b,c) < d_hat

    def __iter__(self):
        return iter((self.alpha_hat, self.d_hat, self.violations))


def verify_reciprocal(k: float, samples: int, seed: int, d_candidate: float | None = None) -> ReciprocalReport:
    """Angle at a and defect over triangles with d(a,[b,c]) <= k and d(b,c) >= d_candidate."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    d_hat = 2.0 * k + 1.0 if d_candidate is None else d_candidate
    rows = np.random.default_rng(seed).random((samples, 3))
    lb = _log_uniform(rows[:, 0], *SIDE_RANGE)
    lc = _log_uniform(rows[:, 1], *SIDE_RANGE)
    theta = math.pi * (1.0 - rows[:, 2])  # (0, pi]
    bc = opposite_side(lb, lc, theta)
    close = dist_to_opposite_side(lb, lc, theta) <= k
    ok = close & (bc >= d_hat)
    far = ok & (np.minimum(lb, lc) >= d_hat)
    dfc = lb + lc - bc
    alpha_hat = float(theta[ok].min()) if ok.any() else math.nan
    C_hat = float(dfc[ok].max()) if ok.any() else math.nan
    bad = ok & ((bc > lb + lc + 1e-10) | (dfc > C_hat) | (theta < alpha_hat))
    return ReciprocalReport(
        alpha_hat=alpha_hat, d_hat=d_hat, violations=tuple(int(i) for i in np.nonzero(bad)[0]),
        C_hat=C_hat, alpha_hat_far=float(theta[far].min()) if far.any() else math.nan,
        accepted=int(ok.sum()), excluded=int((close & ~ok).sum()),
    )


@dataclass(frozen=True)
class InnerTriangle:
    alpha: Point
    beta: Point
    gamma: Point

    @property
    def diameter(self) -> float:
        return max(dist(self.alpha, self.beta), dist(self.alpha, self.gamma), dist(self.beta, self.gamma))


def inner_triangle(xi: BoundaryPoint, p: Point, q: Point) -> InnerTriangle:
    """Points on (xi,q], (xi,p], [p,q] with matching distances and alpha, beta on one horocycle.

    p and q must lie on a common horocycle at xi.
    """
    if p == q:
        return InnerTriangle(p, p, p)
    L = dist(p, q)
    if abs(busemann(xi, p, q)) > 1e-9 * max(1.0, L):
        raise ValueError("p and q must lie on one horocycle at xi")

    def corners(t):
        g = point_toward(p, q, t * L)
        return point_toward(q, xi, dist(g, q)), point_toward(p, xi, dist(g, p)), g

    def f(t):
        a, b, _ = corners(t)
        return busemann(xi, a, b)

    lo, hi = f(0.0), f(1.0)
    if not (lo <= 0.0 <= hi):
        raise BisectionFailure(f"no sign change on [p, q]: {lo:.3g}, {hi:.3g}")
    t = brentq(f, 0.0, 1.0, xtol=1e-15)
    return InnerTriangle(*corners(t))


def equality_chain_residual(p: Point, q: Point, tri: InnerTriangle) -> float:
    """max |d(p,q) - 2 d(.)| over the four half-lengths."""
    L = dist(p, q)
    halves = (dist(p, tri.gamma), dist(p, tri.beta), dist(q, tri.gamma), dist(q, tri.alpha))
    return max(abs(L - 2.0 * h) for h in halves)


def _horocycle_pair(row: np.ndarray) -> tuple[BoundaryPoint, Point, Point]:
    xi = INFINITY if row[0] < 0.2 else Real(-5.0 + 10.0 * row[1])
    p = Point(-5.0 + 10.0 * row[2], float(_log_uniform(row[3], math.exp(-3), math.exp(3))))
    shift = float(_log_uniform(abs(2.0 * row[4] - 1.0), math.exp(-4), math.exp(6)))
    shift = math.copysign(shift, row[4] - 0.5)
    # slide along the horocycle: send xi to infinity, translate, come back
    to_xi = Mobius.identity() if xi.is_infinity else Mobius.from_endpoints(Real(xi.x + 1.0), xi)
    back = to_xi.inverse()
    p0 = back.apply(p)
    q = to_xi.apply(Point(p0.x + shift, p0.y))
    return xi, p, q


def verify_inner_triangle(samples: int, seed: int) -> ConstantEstimate:
    """Largest inner-triangle diameter over random horocyclic pairs; also the worst equality residual."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rows = np.random.default_rng(seed).random((samples, 5))
    delta, residual = 0.0, 0.0
    for row in rows:
        xi, p, q = _horocycle_pair(row)
        tri = inner_triangle(xi, p, q)
        delta = max(delta, tri.diameter)
        residual = max(residual, equality_chain_residual(p, q, tri))
    return ConstantEstimate(0.0, delta, samples, seed, {"chain_residual": residual})


@dataclass(frozen=True)
class FlowConfiguration:
    v: Frame
    w: Frame
    gamma: Mobius
    axis: Geodesic
    crossing_angle: float
    I_v: Point
    I_w: Point
    x0: Point
    y0: Point


def orthogonal_horocycle_frame(v: Frame, axis: Geodesic, window: float = 100.0) -> Frame:
    """The frame h^s v whose backward geodesic meets ``axis`` at a right angle.

    v must be the downward vertical frame at height 1, so the backward rays
    are the vertical lines x = -s.
    """
    c = axis.center

    def f(s):
        return horocycle_flow(v, s).basepoint.x - c

    lo, hi = f(-window), f(window)
    if lo * hi > 0:
        raise RootSearchFailure(f"no orthogonal frame for |s| <= {window}")
    s = brentq(f, -window, window, xtol=1e-13)
    return horocycle_flow(v, s)


def _flow_configuration(row: np.ndarray, alpha0: float) -> FlowConfiguration | None:
    v = Frame.flip()
    phi = alpha0 + row[0] * (math.pi / 2.0 - alpha0)
    h = math.exp(3.0 * row[1])
    side = 1.0 if row[2] < 0.5 else -1.0
    c = side * h / math.tan(phi)
    r = h / math.sin(phi)
    e1, e2 = Real(c - r), Real(c + r)
    if row[3] >= 0.5:
        e1, e2 = e2, e1
    length = float(_log_uniform(row[4], 0.1, 3.0))
    gamma = from_axis_length(e1, e2, length)
    axis = Geodesic(e1, e2)
    w = orthogonal_horocycle_frame(v, axis)
    I_v = intersection(Geodesic(v.minus, v.plus), axis)
    I_w = intersection(Geodesic(w.minus, w.plus), axis)

    frame = Mobius.from_endpoints(e1, e2)
    u = frame.inverse().apply(I_v).y
    s = math.log(u) + (-2.0 + 4.0 * row[5])
    rho = float(_log_uniform(row[6], 0.1, 10.0))
    x0 = frame.apply(Point(0.0, math.exp(s)))
    y0 = None
    for sign in (1.0, -1.0):
        cand = frame.apply(Point(sign * math.exp(s) * math.tanh(rho), math.exp(s) / math.cosh(rho)))
        # bounded component of the horoball y >= 1 cut by the axis
        if abs(cand.z - axis.center) < axis.radius and cand.y >= 1.0:
            y0 = cand
    if y0 is None:
        return None
    return FlowConfiguration(v, w, gamma, axis, angle_between(Geodesic(v.minus, v.plus), axis),
                             I_v, I_w, x0, y0)


@dataclass(frozen=True)
class FlowReport:
    alpha0: float
    samples: int
    seed: int
    accepted: int
    skipped: int
    C_hat: float
    max_IvIw: float
    IvIw_violations: int
    upper_violations: int
    worst_upper_slack: float  # min of (bound - value); >= 0 means every upper bound held
    threshold: float
    C2_hat_w: float  # max of (lower bound without constant - value) beyond the threshold
    C2_hat_v: float
    orthogonality_residual: float


def verify_flow_lemmas(samples: int, seed: int, alpha0: float = math.pi / 3, iterations: int = 6,
                       threshold: float = 2.0, thin: ConstantEstimate | None = None,
                       thin_samples: int = 100_000) -> FlowReport:
    """Check the I_v, I_w comparison and both sandwich families on sampled configurations."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if thin is None:
        thin = estimate_thin_constant(alpha0, thin_samples, seed)
    rows = np.random.default_rng(seed).random((samples, 7))
    accepted = skipped = iv_bad = up_bad = 0
    max_iviw, worst_up, c2w, c2v, orth = 0.0, math.inf, -math.inf, -math.inf, 0.0
    for row in rows:
        try:
            cfg = _flow_configuration(row, alpha0)
        except RootSearchFailure:
            cfg = None
        if cfg is None:
            skipped += 1
            continue
        accepted += 1
        orth = max(orth, abs(angle_between(Geodesic(cfg.w.minus, cfg.w.plus), cfg.axis) - math.pi / 2.0))
        div = dist(cfg.I_v, cfg.I_w)
        max_iviw = max(max_iviw, div)
        iv_bad += div > thin.estimate
        base = dist(cfg.y0, cfg.x0)
        x, y = cfg.x0, cfg.y0
        for _ in range(iterations):
            x, y = cfg.gamma.apply(x), cfg.gamma.apply(y)
            dxw, dxv = dist(x, cfg.I_w), dist(x, cfg.I_v)
            to_w, to_v = dist_to_backward_ray(cfg.w, y), dist_to_backward_ray(cfg.v, y)
            slack = min(base + dxw - to_w, base + dxv - to_v)
            worst_up = min(worst_up, slack)
            up_bad += slack < -1e-10
            if dxw >= threshold and dxv >= threshold:
                c2w = max(c2w, base + dxw - to_w)
                c2v = max(c2v, base + dxv - to_v)
    return FlowReport(alpha0, samples, seed, accepted, skipped, thin.estimate, max_iviw, iv_bad, up_bad,
                      worst_up, threshold, c2w, c2v, orth)
