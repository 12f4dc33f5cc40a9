"""Horoball halves, cones around a backward ray, orbit censuses and density gaps.

Tests are done in coordinates normalized by the frame: q = f^{-1} p, where
the backward endpoint sits at 0 and the basepoint at i. There the horoball
is the disk |q - i/2| <= 1/2 and the backward ray is the segment (0, i].
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Horoball, HorokitError, Point, _tol
from .flows import Frame, frame_points, geodesic_flow, horocycle_flow, pairwise_dist
from .isometry import Mobius, geodesic_matrix
from .schottky import SchottkySpec, _require, iter_words, orbit_array

CENSUS_COLUMNS = ("n_truncation", "max_len", "D", "R", "plus_count", "minus_count", "full_count", "tie_count")


class EmptyTargets(HorokitError):
    pass


class Side(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class NormalizedCoords:
    u: float
    w: float

    def __post_init__(self):
        if not self.w > 0:
            raise ValueError("normalized height must be positive")


@dataclass(frozen=True)
class Census:
    D: float
    R: float
    max_len: int
    plus_count: int
    minus_count: int
    full_count: int = 0  # whole horoball at depth D, cone removed
    tie_count: int = 0  # points on the dividing ray, counted in both halves
    n_truncation: int = 0
    status: str = ""

    def row(self) -> dict:
        return {k: getattr(self, k) for k in CENSUS_COLUMNS}


def normalized(f: Frame, p: Point) -> NormalizedCoords:
    q = f.m.inverse().apply(p)
    return NormalizedCoords(q.x, q.y)


def _pull(m: Mobius, z: np.ndarray) -> np.ndarray:
    inv = m.inverse()
    return (inv.a * z + inv.b) / (inv.c * z + inv.d)


def horoball_of(v: Frame) -> Horoball:
    return Horoball(v.minus, v.basepoint)


def _in_ball(q: np.ndarray, tol: float) -> np.ndarray:
    # |q - i/2| <= 1/2  <=>  |q|^2 <= Im q
    return np.abs(q) ** 2 <= q.imag * (1.0 + tol)


def half_masks(v: Frame, D: float, z: np.ndarray, tol: float | None = None):
    """(plus, minus) membership masks of Hor^+-(g^{-D} v) for complex points z."""
    tol = _tol(tol)
    q = _pull(v.m @ geodesic_matrix(-D), np.asarray(z, dtype=complex))
    ball = _in_ball(q, tol)
    slack = tol * np.maximum(1.0, np.abs(q))
    return ball & (q.real >= -slack), ball & (q.real <= slack)


def cone_mask(v: Frame, alpha: float, z: np.ndarray, tol: float | None = None) -> np.ndarray:
    tol = _tol(tol)
    q = _pull(v.m, np.asarray(z, dtype=complex))
    # inside the horoball |q| <= 1, so the nearest point of the full geodesic is on the ray
    return _in_ball(q, tol) & (np.arcsinh(np.abs(q.real) / q.imag) <= alpha + tol)


def in_horoball_half(v: Frame, D: float, p: Point, side: Side, tol: float | None = None) -> bool:
    plus, minus = half_masks(v, D, np.array([p.z]), tol)
    return bool((plus if side is Side.PLUS else minus)[0])


def in_cone(v: Frame, alpha: float, p: Point, tol: float | None = None) -> bool:
    return bool(cone_mask(v, alpha, np.array([p.z]), tol)[0])


def census(spec: SchottkySpec, v: Frame, D: float, R: float, max_len: int,
           tol: float | None = None) -> Census:
    _require(spec)
    z = orbit_array(spec, max_len)
    plus, minus = half_masks(v, D, z, tol)
    outside = ~cone_mask(v, R, z, tol)
    q = _pull(v.m @ geodesic_matrix(-D), z)
    full = _in_ball(q, _tol(tol)) & outside
    return Census(
        D=D, R=R, max_len=max_len,
        plus_count=int(np.count_nonzero(plus & outside)),
        minus_count=int(np.count_nonzero(minus & outside)),
        full_count=int(np.count_nonzero(full)),
        tie_count=int(np.count_nonzero(plus & minus & outside)),
        n_truncation=len(spec),
    )


def radial_witnesses(spec: SchottkySpec, v: Frame, R0: float, t_max: float, max_len: int,
                     steps: int = 201) -> list[float]:
    """Grid times t in [0, t_max] where the backward ray passes within R0 of the orbit."""
    _require(spec)
    z = orbit_array(spec, max_len)
    ts = np.linspace(0.0, t_max, steps) if steps > 1 else np.array([0.0])
    base, _ = frame_points([geodesic_flow(v, -t) for t in ts])
    near = np.empty(len(ts), dtype=bool)
    for i, b in enumerate(base):
        near[i] = pairwise_dist(b, z).min() <= R0
    return [float(t) for t in ts[near]]


def density_gap(spec: SchottkySpec, v: Frame, targets: Sequence[Frame], s_range: tuple[float, float],
                s_steps: int, max_len: int) -> float:
    """max over targets of the frame distance from the sampled horocycle arc to the target's orbit."""
    if not targets:
        raise EmptyTargets("density_gap needs at least one target frame")
    _require(spec)
    lo, hi = s_range
    ss = np.linspace(lo, hi, s_steps) if s_steps > 1 else np.array([lo])
    if lo <= 0.0 <= hi and 0.0 not in ss:
        ss = np.sort(np.append(ss, 0.0))
    arc0, arc1 = frame_points([horocycle_flow(v, float(s)) for s in ss])
    mats = _word_mats(spec, max_len)
    worst = 0.0
    for w in targets:
        # gamma . w has matrix gamma @ w.m
        wm = np.array(w.m.as_tuple()).reshape(2, 2)
        gw = mats @ wm
        p0 = _act(gw, 1j)
        p1 = _act(gw, 1j * math.e)
        gap = 0.5 * (pairwise_dist(arc0[:, None], p0[None, :]) + pairwise_dist(arc1[:, None], p1[None, :]))
        worst = max(worst, float(gap.min()))
    return worst


def _act(mats: np.ndarray, z: complex) -> np.ndarray:
    return (mats[:, 0, 0] * z + mats[:, 0, 1]) / (mats[:, 1, 0] * z + mats[:, 1, 1])


def _word_mats(spec: SchottkySpec, max_len: int) -> np.ndarray:
    return np.array([m.as_tuple() for _, m in iter_words(spec, max_len)], dtype=float).reshape(-1, 2, 2)

