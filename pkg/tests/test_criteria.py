import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import mobius
from horokit.core import INFINITY, Geodesic, Point, Real, busemann, dist_to_geodesic
from horokit.criteria import (
    EmptyTargets,
    Side,
    census,
    cone_mask,
    density_gap,
    half_masks,
    horoball_of,
    in_cone,
    in_horoball_half,
    normalized,
    radial_witnesses,
)
from horokit.flows import Frame, dist_to_backward_ray, frame_from_endpoints, geodesic_flow, horocycle_flow
from horokit.schottky import orbit_array

J = frame_from_endpoints(INFINITY, Real(0.0), Point(0.0, 1.0))
D10 = math.log(10.0)


def test_horoball_of_frames():
    h = horoball_of(J)
    assert h.base == INFINITY and h.contains(Point(7.0, 1.0)) and not h.contains(Point(0.0, 0.99))
    h = horoball_of(Frame.identity())
    assert h.base == Real(0.0) and h.euclidean() == pytest.approx((0.5, 0.5))
    assert busemann(h.base, h.anchor, h.anchor) == 0.0


def test_halves_of_deep_horoball():
    assert in_horoball_half(J, D10, Point(-5.0, 20.0), Side.PLUS)
    assert not in_horoball_half(J, D10, Point(-5.0, 20.0), Side.MINUS)
    assert in_horoball_half(J, D10, Point(5.0, 20.0), Side.MINUS)
    assert not in_horoball_half(J, D10, Point(5.0, 20.0), Side.PLUS)
    for side in Side:
        assert not in_horoball_half(J, D10, Point(-5.0, 2.0), side)


def test_cone_examples():
    assert in_cone(J, 1.0, Point(0.5, 1.2))
    assert not in_cone(J, 1.0, Point(10.0, 1.5))
    assert in_cone(J, 1e-6, Point(0.0, 30.0))


def test_normalized_coordinates():
    c = normalized(J, Point(-5.0, 20.0))
    assert c.w > 0 and c.u > 0


@given(st.floats(-50, 50), st.floats(0.0, 5.0).map(math.exp))
def test_halves_partition_the_horoball(x, y):
    z = np.array([complex(x, y)])
    plus, minus = half_masks(J, 0.0, z)
    assert bool(plus[0] or minus[0]) == (y >= 1.0 - 1e-9)
    if plus[0] and minus[0]:
        assert abs(x) <= 1e-9 * max(1.0, abs(x))


@given(st.floats(-50, 50), st.floats(0.0, 5.0).map(math.exp))
def test_ray_distance_equals_geodesic_distance_in_the_horoball(x, y):
    p = Point(x, y)
    ray = dist_to_backward_ray(J, p)
    assert ray == pytest.approx(dist_to_geodesic(p, Geodesic(Real(0.0), INFINITY)), abs=1e-12)


@given(st.floats(0.0, 4.0), st.floats(0.0, 4.0), st.floats(0.0, 2.0))
def test_membership_matches_the_union_definition(t, s, D):
    # basepoints of h^s g^{-t-D} v with s, t >= 0 fill the plus half
    for v in (J, Frame.identity()):
        b = horocycle_flow(geodesic_flow(v, -t - D), s).basepoint
        assert in_horoball_half(v, D, b, Side.PLUS)


def test_census_matches_brute_force(linear5):
    D, R, L = 0.5, 0.5, 2
    c = census(linear5, J, D, R, L)
    z = orbit_array(linear5, L)
    plus = minus = 0
    for w in z:
        p = Point(w.real, w.imag)
        outside = not in_cone(J, R, p)
        plus += in_horoball_half(J, D, p, Side.PLUS) and outside
        minus += in_horoball_half(J, D, p, Side.MINUS) and outside
    assert (c.plus_count, c.minus_count) == (plus, minus)
    assert c.n_truncation == 5


def test_census_is_equivariant(linear5):
    # membership of g.p relative to g.v equals membership of p relative to v
    z = orbit_array(linear5, 2)
    for letter in linear5.letters():
        g = linear5.generator(letter)
        gz = (g.a * z + g.b) / (g.c * z + g.d)
        gv = J.translate(g)
        for a, b in zip(half_masks(J, 0.3, z), half_masks(gv, 0.3, gz)):
            assert (a == b).all()
        assert (cone_mask(J, 0.7, z) == cone_mask(gv, 0.7, gz)).all()


def test_census_monotone_in_word_length(linear5):
    counts = [census(linear5, J, 0.2, 0.2, L) for L in range(4)]
    assert [c.plus_count for c in counts] == sorted(c.plus_count for c in counts)
    assert [c.minus_count for c in counts] == sorted(c.minus_count for c in counts)


def test_census_beyond_reach_is_empty(linear5):
    c = census(linear5, J, 40.0, 1.0, 2)
    assert c.plus_count == c.minus_count == 0


def test_radial_witnesses(linear5):
    w1 = radial_witnesses(linear5, J, 0.5, 6.0, 1, steps=61)
    w2 = radial_witnesses(linear5, J, 0.5, 6.0, 2, steps=61)
    assert w1[0] == 0.0
    assert set(w1) <= set(w2)


def test_density_gap(linear5):
    assert density_gap(linear5, J, [J], (-1.0, 1.0), 4, 1) == 0.0
    with pytest.raises(EmptyTargets):
        density_gap(linear5, J, [], (0.0, 1.0), 4, 1)
    target = geodesic_flow(horocycle_flow(J, 3.0), -2.0)
    coarse = density_gap(linear5, J, [target], (0.0, 5.0), 11, 1)
    fine = density_gap(linear5, J, [target], (0.0, 5.0), 21, 2)
    assert fine <= coarse


def test_plus_side_targets_are_closer(linear5):
    deep = horocycle_flow(J, 4.0)
    right = density_gap(linear5, J, [deep], (0.0, 5.0), 201, 2)
    left = density_gap(linear5, J, [deep], (-5.0, 0.0), 201, 2)
    assert right < left


@given(mobius())
def test_horoball_anchor_is_on_its_horocycle(m):
    v = Frame(m)
    h = horoball_of(v)
    assert h.base.isclose(v.minus) and h.contains(v.basepoint)
