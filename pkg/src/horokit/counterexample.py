"""Schottky group with one-sided horocycle density: construction and certificates.

Plus circles have radius 1, centered at 2n+1 (tangent variant, mutually
tangent) or at x_n (opposite variant). Minus circles are centered at -x_n
with radius r_n, mutually tangent, where x_n + r_n = 2 (r_1 + ... + r_n).
Indices start at n = 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .core import INFINITY, Geodesic, HorokitError, Point, Real, angle_between, dist, intersection
from .criteria import Census, census
from .flows import Frame, frame_from_endpoints
from .isometry import Mobius, pairing_isometry, translation_length
from .schottky import Pair, PairedCircle, SchottkySpec

ORIGIN = Point(0.0, 1.0)

ROW_COLUMNS = (
    "n", "x_n", "r_n", "P_n_x", "P_n_y", "N_n_x", "N_n_y", "ell_n", "im_gamma_o", "re_gamma_o",
    "d_o_zn", "d_Pn_zn", "d_o_Pn", "d_gamma_o_Nn", "theta_n",
)


class PingPongFailed(HorokitError):
    def __init__(self, n: int, message: str):
        super().__init__(f"n={n}: {message}")
        self.n = n


class IndexOutOfRange(HorokitError):
    pass


class Variant(enum.Enum):
    TANGENT = "tangent"
    OPPOSITE = "opposite"


@dataclass(frozen=True)
class Schedule:
    """Radii r_k of the minus circles: linear r_k = k, geometric r_k = alpha^k, or an explicit list."""

    kind: str = "linear"
    alpha: float = 2.0
    radii: tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in ("linear", "geometric", "custom"):
            raise ValueError(f"unknown schedule {self.kind!r}")
        if self.kind == "geometric" and not self.alpha > 1.0:
            raise ValueError("geometric schedule needs alpha > 1")
        if self.kind == "custom" and not all(r > 0 for r in self.radii):
            raise ValueError("custom radii must be positive")

    @classmethod
    def linear(cls) -> "Schedule":
        return cls("linear")

    @classmethod
    def geometric(cls, alpha: float) -> "Schedule":
        return cls("geometric", alpha=float(alpha))

    @classmethod
    def custom(cls, radii) -> "Schedule":
        return cls("custom", radii=tuple(float(r) for r in radii))

    def radius(self, k: int) -> float:
        if k < 1:
            raise IndexOutOfRange("radii are indexed from 1")
        if self.kind == "linear":
            return k
        if self.kind == "geometric":
            return self.alpha ** k
        if k > len(self.radii):
            raise IndexOutOfRange(f"custom schedule has {len(self.radii)} radii, asked for {k}")
        return self.radii[k - 1]


def x_sequence(schedule: Schedule, n: int) -> float:
    """Center distance x_n from the tangency identity x_n + r_n = 2 (r_1 + ... + r_n)."""
    if n < 1:
        raise IndexOutOfRange("x_n is defined for n >= 1")
    if schedule.kind == "linear":
        # exact integers: n(n+1) - n
        return 2 * (n * (n + 1) // 2) - n
    return 2.0 * math.fsum(schedule.radius(k) for k in range(1, n + 1)) - schedule.radius(n)


@dataclass(frozen=True)
class CounterexampleConfig:
    variant: Variant = Variant.TANGENT
    schedule: Schedule = field(default_factory=Schedule.linear)
    n_max: int = 10

    def __post_init__(self):
        if not (isinstance(self.n_max, int) and self.n_max >= 1):
            raise ValueError("n_max must be an integer >= 1")


def _check_index(config: CounterexampleConfig, n: int):
    if not 1 <= n <= config.n_max:
        raise IndexOutOfRange(f"n={n} outside 1..{config.n_max}")


def plus_center(config: CounterexampleConfig, n: int) -> float:
    if config.variant is Variant.TANGENT:
        return 2 * n + 1
    return x_sequence(config.schedule, n)


def circles(config: CounterexampleConfig, n: int) -> tuple[PairedCircle, PairedCircle]:
    x = x_sequence(config.schedule, n)
    return PairedCircle(plus_center(config, n), 1.0), PairedCircle(-x, config.schedule.radius(n))


def nominal_axis(config: CounterexampleConfig, n: int) -> Geodesic:
    """Geodesic joining the two circle centers."""
    return Geodesic(Real(plus_center(config, n)), Real(-x_sequence(config.schedule, n)))


def _pair(config: CounterexampleConfig, n: int) -> Pair:
    plus, minus = circles(config, n)
    g = pairing_isometry(Real(plus.center), Real(minus.center), plus.geodesic, minus.geodesic)
    return Pair(plus, minus, g)


def generator(config: CounterexampleConfig, n: int) -> Mobius:
    _check_index(config, n)
    return _pair(config, n).gamma


def build(config: CounterexampleConfig) -> SchottkySpec:
    spec = SchottkySpec(tuple(_pair(config, n) for n in range(1, config.n_max + 1)))
    if not spec.certificate.ok:
        first = min(spec.certificate.violations, key=lambda v: min(v.pairs, default=0))
        raise PingPongFailed(min(first.pairs, default=0), first.message)
    return spec


def special_points(config: CounterexampleConfig, n: int) -> tuple[Point, Point, Point]:
    """(P_n, N_n, z_n): the axis crossing the plus circle, the minus circle, and the top of the plus circle."""
    _check_index(config, n)
    plus, minus = circles(config, n)
    line = nominal_axis(config, n)
    return intersection(line, plus.geodesic), intersection(line, minus.geodesic), Point(plus.center, 1.0)


def closed_form_points(config: CounterexampleConfig, n: int) -> tuple[Point, Point]:
    """P_n and N_n from the closed forms for a circle centered at an axis endpoint."""
    _check_index(config, n)
    x = x_sequence(config.schedule, n)
    r = config.schedule.radius(n)
    c = plus_center(config, n)
    L = c + x  # axis diameter
    P = Point(c - 1.0 / L, math.sqrt(1.0 - 1.0 / (L * L)))
    N = Point(-x + r * r / L, r * math.sqrt(1.0 - r * r / (L * L)))
    return P, N


def crossing_angle(config: CounterexampleConfig, n: int) -> float:
    """Acute angle between the nominal axis and the imaginary geodesic (infinity, 0)."""
    _check_index(config, n)
    return angle_between(Geodesic(INFINITY, Real(0.0)), nominal_axis(config, n))


@dataclass(frozen=True)
class RowReport:
    n: int
    x_n: float
    r_n: float
    P_n: Point
    N_n: Point
    ell_n: float
    im_gamma_o: float
    re_gamma_o: float
    d_o_zn: float
    d_Pn_zn: float
    d_o_Pn: float
    d_gamma_o_Nn: float
    theta_n: float

    def row(self) -> dict:
        return {
            "n": self.n, "x_n": self.x_n, "r_n": self.r_n,
            "P_n_x": self.P_n.x, "P_n_y": self.P_n.y, "N_n_x": self.N_n.x, "N_n_y": self.N_n.y,
            "ell_n": self.ell_n, "im_gamma_o": self.im_gamma_o, "re_gamma_o": self.re_gamma_o,
            "d_o_zn": self.d_o_zn, "d_Pn_zn": self.d_Pn_zn, "d_o_Pn": self.d_o_Pn,
            "d_gamma_o_Nn": self.d_gamma_o_Nn, "theta_n": self.theta_n,
        }


def row_report(config: CounterexampleConfig, n: int) -> RowReport:
    """One row, computed from generator n alone (no need to build the whole group)."""
    _check_index(config, n)
    P, N, z = special_points(config, n)
    g = _pair(config, n).gamma
    go = g.apply(ORIGIN)
    return RowReport(
        n=n, x_n=float(x_sequence(config.schedule, n)), r_n=float(config.schedule.radius(n)),
        P_n=P, N_n=N, ell_n=translation_length(g),
        im_gamma_o=go.y, re_gamma_o=go.x,
        d_o_zn=dist(ORIGIN, z), d_Pn_zn=dist(P, z), d_o_Pn=dist(ORIGIN, P),
        d_gamma_o_Nn=dist(go, N), theta_n=crossing_angle(config, n),
    )


def report(config: CounterexampleConfig) -> list[RowReport]:
    build(config)
    return [row_report(config, n) for n in range(1, config.n_max + 1)]


def first_index_from(values, predicate) -> int | None:
    """Smallest n such that predicate holds for every row from n on; None if it fails at the end."""
    n0 = None
    for n, v in values:
        if predicate(v):
            if n0 is None:
                n0 = n
        else:
            n0 = None
    return n0


@lru_cache(maxsize=None)
def _flip() -> Frame:
    return frame_from_endpoints(INFINITY, Real(0.0), ORIGIN)


def one_sidedness_certificate(config: CounterexampleConfig, D: float, R: float, max_len: int) -> Census:
    """Census for the vertical frame at i pointing down; status says whether the certificate holds."""
    spec = build(config)
    c = census(spec, _flip(), D, R, max_len)
    if c.minus_count == 0 and c.plus_count >= 1:
        status = "certified: orbit points on the plus side only"
    elif c.minus_count > 0:
        status = f"refuted: {c.minus_count} orbit points on the minus side"
    else:
        status = "withheld: no orbit point reaches depth D outside the cone at this truncation"
    return Census(**{**c.__dict__, "status": status})
