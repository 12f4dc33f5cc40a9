"""Schottky groups from paired half-disks: ping-pong, orbits, reduction, limit sets.

Generator k (1-based) is ``pairs[k-1].gamma``; it carries the closed
outside of the plus disk into the closed minus disk. A word is a tuple of
signed generator indices, ``-k`` standing for the inverse of generator k,
and evaluates left to right as a matrix product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .core import INFINITY, BoundaryPoint, Geodesic, HorokitError, Point, Real, _tol
from .isometry import Kind, Mobius, axis, classify, fixed_points

ORIGIN = Point(0.0, 1.0)


class PingPongUnverified(HorokitError):
    pass


class MaxStepsExceeded(HorokitError):
    pass


@dataclass(frozen=True)
class PairedCircle:
    """Half-disk bounded by the semicircle of the given center and radius."""

    center: float
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.center) and self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"bad circle center={self.center} radius={self.radius}")

    @property
    def interval(self) -> tuple[float, float]:
        return self.center - self.radius, self.center + self.radius

    @property
    def geodesic(self) -> Geodesic:
        lo, hi = self.interval
        return Geodesic(Real(lo), Real(hi))

    def contains(self, p: Point, tol: float | None = None) -> bool:
        """Strictly inside the open half-disk (boundary counts as outside)."""
        return math.hypot(p.x - self.center, p.y) < self.radius * (1.0 - _tol(tol))

    def holds(self, x: BoundaryPoint, tol: float | None = None) -> bool:
        """Boundary point in the closed interval."""
        if x.is_infinity:
            return False
        lo, hi = self.interval
        slack = _tol(tol) * max(1.0, abs(lo), abs(hi))
        return lo - slack <= x.x <= hi + slack


@dataclass(frozen=True)
class Pair:
    plus: PairedCircle
    minus: PairedCircle
    gamma: Mobius


@dataclass(frozen=True)
class Violation:
    kind: str  # "overlap" | "image" | "exterior"
    pairs: tuple[int, ...]
    witness: object
    message: str


@dataclass(frozen=True)
class PingPongReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.letters, self.letters[1:]):
            if a == -b:
                raise ValueError(f"word {self.letters} is not reduced")
        if 0 in self.letters:
            raise ValueError("generator indices start at 1")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def __str__(self):
        if not self.letters:
            return "e"
        return ".".join(f"g{x}" if x > 0 else f"G{-x}" for x in self.letters)


@dataclass(frozen=True)
class OrbitPoint:
    point: Point
    word: Word


@dataclass(frozen=True)
class SchottkySpec:
    pairs: tuple[Pair, ...]
    tol: float | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))

    def __len__(self):
        return len(self.pairs)

    @cached_property
    def certificate(self) -> PingPongReport:
        return verify_ping_pong(self, self.tol)

    def letters(self) -> list[int]:
        """Generator letters in enumeration order: 1, -1, 2, -2, ..."""
        out = []
        for k in range(1, len(self.pairs) + 1):
            out += [k, -k]
        return out

    @cached_property
    def _matrices(self) -> dict[int, Mobius]:
        out = {}
        for k, pair in enumerate(self.pairs, start=1):
            out[k] = pair.gamma
            out[-k] = pair.gamma.inverse()
        return out

    def generator(self, letter: int) -> Mobius:
        return self._matrices[letter]

    def evaluate(self, word: Word | Sequence[int]) -> Mobius:
        m = Mobius.identity()
        for letter in word:
            m = m @ self._matrices[letter]
        return m

    def target(self, letter: int) -> PairedCircle:
        """Disk into which the letter's generator pushes everything outside its source disk."""
        pair = self.pairs[abs(letter) - 1]
        return pair.minus if letter > 0 else pair.plus

    def disks(self) -> Iterator[tuple[int, str, PairedCircle]]:
        for k, pair in enumerate(self.pairs, start=1):
            yield k, "plus", pair.plus
            yield k, "minus", pair.minus


def _require(spec: SchottkySpec):
    if not spec.certificate.ok:
        first = spec.certificate.violations[0]
        raise PingPongUnverified(first.message)


def verify_ping_pong(spec: SchottkySpec, tol: float | None = None) -> PingPongReport:
    """Check disjoint disks and that each generator pairs its circles correctly.

    Tangent disks are allowed. Violations are collected, not raised.
    """
    tol = _tol(tol)
    found: list[Violation] = []
    if not spec.pairs:
        return PingPongReport((Violation("empty", (), None, "no generators"),))

    # sweep over intervals sorted by left end; overlap iff a left end precedes the running right end
    items = sorted(spec.disks(), key=lambda item: item[2].interval[0])
    reach, reach_item = -math.inf, None
    for item in items:
        lo, hi = item[2].interval
        if reach_item is not None:
            slack = tol * max(1.0, abs(lo), abs(reach))
            if lo < reach - slack:
                a, b = reach_item, item
                found.append(Violation(
                    "overlap", (a[0], b[0]), 0.5 * (lo + reach),
                    f"{a[1]} disk of pair {a[0]} overlaps {b[1]} disk of pair {b[0]} on ({lo:.6g}, {reach:.6g})"))
        if hi > reach:
            reach, reach_item = hi, item

    for k, pair in enumerate(spec.pairs, start=1):
        g = pair.gamma
        image = g.apply(pair.plus.geodesic)
        if not image.same_as(pair.minus.geodesic, tol):
            found.append(Violation(
                "image", (k,), image,
                f"pair {k}: generator sends the plus circle to {image.e1}, {image.e2}, not the minus circle"))
        lo, hi = pair.plus.interval
        e1, e2, w = g.apply(Real(lo)), g.apply(Real(hi)), g.apply(INFINITY)
        bad = [z for z in (e1, e2, w) if not pair.minus.holds(z, tol)]
        between = not bad and min(e1.x, e2.x) <= w.x <= max(e1.x, e2.x)
        if bad or not between:
            witness = bad[0] if bad else w
            found.append(Violation(
                "exterior", (k,), witness,
                f"pair {k}: the outside of the plus disk is not carried into the minus disk (witness {witness})"))
    return PingPongReport(tuple(found))


def _sort_key(letter: int):
    return abs(letter), letter < 0


def iter_words(spec: SchottkySpec, max_len: int) -> Iterator[tuple[Word, Mobius]]:
    """Reduced words of length <= max_len, breadth first, lexicographic within a level."""
    letters = sorted(spec.letters(), key=_sort_key)
    level = [((), Mobius.identity())]
    yield Word(), level[0][1]
    for _ in range(max_len):
        nxt = []
        for letters_so_far, m in level:
            last = letters_so_far[-1] if letters_so_far else 0
            for x in letters:
                if x == -last:
                    continue
                w = letters_so_far + (x,)
                wm = m @ spec.generator(x)
                nxt.append((w, wm))
                yield Word(w), wm
        level = nxt


def enumerate_orbit(spec: SchottkySpec, max_len: int, base: Point = ORIGIN) -> list[OrbitPoint]:
    _require(spec)
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    return [OrbitPoint(m.apply(base), w) for w, m in iter_words(spec, max_len)]


def orbit_array(spec: SchottkySpec, max_len: int, base: Point = ORIGIN) -> np.ndarray:
    """Orbit points as a complex array, in the same order as :func:`enumerate_orbit`.

    Products are taken in numpy without per-step renormalization, so use
    this for counting and distances, not for long words.
    """
    _require(spec)
    letters = sorted(spec.letters(), key=_sort_key)
    gens = np.array([spec.generator(x).as_tuple() for x in letters], dtype=float).reshape(-1, 2, 2)
    inverse_slot = np.array([letters.index(-x) for x in letters])
    mats = np.eye(2)[None]
    last = np.array([-1])
    chunks = [mats]
    for _ in range(max_len):
        kids = np.einsum("pij,gjk->pgik", mats, gens)
        keep = np.ones(kids.shape[:2], dtype=bool)
        has_last = last >= 0
        keep[np.nonzero(has_last)[0], inverse_slot[last[has_last]]] = False
        mats = kids[keep]
        last = np.broadcast_to(np.arange(len(letters)), keep.shape)[keep]
        chunks.append(mats)
    allm = np.concatenate(chunks)
    z = base.z
    return (allm[:, 0, 0] * z + allm[:, 0, 1]) / (allm[:, 1, 0] * z + allm[:, 1, 1])


def reduced_word_count(k: int, max_len: int) -> int:
    """Number of reduced words of length <= max_len in a free group of rank k."""
    if k == 0:
        return 1
    return 1 + sum(2 * k * (2 * k - 1) ** (n - 1) for n in range(1, max_len + 1))


def reduce_point(spec: SchottkySpec, p: Point, max_steps: int = 10_000,
                 tol: float | None = None) -> tuple[Point, Word]:
    """Push p out of every disk; returns (q, w) with w applied to q giving back p."""
    _require(spec)
    letters: list[int] = []
    q = p
    for _ in range(max_steps):
        for k, side, disk in spec.disks():
            if disk.contains(q, tol):
                # inside minus disk of k: q = g_k(q'); inside plus disk: q = g_k^{-1}(q')
                letter = k if side == "minus" else -k
                q = spec.generator(-letter).apply(q)
                letters.append(letter)
                break
        else:
            return q, Word(tuple(letters))
    raise MaxStepsExceeded(f"point {p} not reduced after {max_steps} steps")


def sample_limit_set(spec: SchottkySpec, max_len: int) -> list[BoundaryPoint]:
    """Attracting fixed points of the nonempty reduced words up to max_len."""
    _require(spec)
    out = []
    for w, m in iter_words(spec, max_len):
        if not len(w):
            continue
        kind = classify(m, spec.tol)
        if kind is Kind.HYPERBOLIC:
            out.append(axis(m, spec.tol)[1])
        elif kind is Kind.PARABOLIC:
            out.append(fixed_points(m, spec.tol)[0])
    return out


def nested_disks(spec: SchottkySpec, max_len: int) -> list[tuple[Word, PairedCircle]]:
    """Images of target disks along words; their union shrinks onto the limit set."""
    _require(spec)
    out = []
    for w, m in iter_words(spec, max_len - 1):
        last = w.letters[-1] if len(w) else 0
        for x in sorted(spec.letters(), key=_sort_key):
            if x == -last:
                continue
            lo, hi = spec.target(x).interval
            a, b = m.apply(Real(lo)), m.apply(Real(hi))
            if a.is_infinity or b.is_infinity:
                continue
            out.append((Word(w.letters + (x,)), PairedCircle(0.5 * (a.x + b.x), 0.5 * abs(a.x - b.x))))
    return out


def one_sided_accumulation(spec: SchottkySpec, max_len: int) -> tuple[float, float]:
    """(sup, inf) of the finite limit-set sample abscissas."""
    xs = [x.x for x in sample_limit_set(spec, max_len) if not x.is_infinity]
    if not xs:
        return -math.inf, math.inf
    return max(xs), min(xs)
