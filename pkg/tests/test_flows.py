import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from conftest import mobius, params
from horokit.core import INFINITY, Point, Real, dist
from horokit.flows import (
    Frame,
    OffGeodesic,
    dist_to_backward_ray,
    frame_dist,
    frame_from_endpoints,
    geodesic_flow,
    horocycle_flow,
)
from horokit.isometry import Mobius

frames = mobius().map(Frame)
flow_time = st.floats(-5.0, 5.0)


def test_horocycle_of_identity_frame():
    for s in (-2.0, 0.5, 3.0):
        b = horocycle_flow(Frame.identity(), s).basepoint
        assert (b.x, b.y) == pytest.approx((s / (s * s + 1), 1 / (s * s + 1)))
        assert horocycle_flow(Frame.identity(), s).plus.x == pytest.approx(1 / s)
        assert horocycle_flow(Frame.identity(), s).minus == Real(0.0)


def test_downward_frame_moves_horizontally():
    for s in (-2.0, 1.5):
        b = horocycle_flow(Frame.flip(), s).basepoint
        assert (b.x, b.y) == pytest.approx((-s, 1.0))
    assert Frame.flip().minus == INFINITY


def test_frame_from_endpoints_checks_the_basepoint():
    f = frame_from_endpoints(Real(-1.0), Real(1.0), Point(0.0, 1.0))
    assert dist(f.basepoint, Point(0.0, 1.0)) < 1e-12
    with pytest.raises(OffGeodesic):
        frame_from_endpoints(Real(-1.0), Real(1.0), Point(0.0, 2.0))


@given(frames, flow_time, flow_time)
def test_fundamental_relation(f, t, s):
    lhs = geodesic_flow(horocycle_flow(f, s), t)
    rhs = horocycle_flow(geodesic_flow(f, t), s * math.exp(t))
    assert frame_dist(lhs, rhs) <= 1e-7


@given(frames, flow_time)
def test_geodesic_flow_moves_at_unit_speed(f, t):
    g = geodesic_flow(f, t)
    assert dist(f.basepoint, g.basepoint) == pytest.approx(abs(t), abs=1e-7)
    assert frame_dist(f, g) == pytest.approx(abs(t), abs=1e-7)
    assert g.minus.isclose(f.minus, 1e-6) and g.plus.isclose(f.plus, 1e-6)


@given(frames, flow_time)
def test_horocycle_flow_keeps_the_backward_endpoint(f, s):
    assert horocycle_flow(f, s).minus.isclose(f.minus, 1e-6)


@given(frames, st.floats(-3.0, 3.0))
def test_horocycle_speed_against_arclength(f, s):
    def speed(u):
        # |d/du basepoint| / Im, by central differences
        h = 1e-6
        a, b = horocycle_flow(f, u - h).basepoint, horocycle_flow(f, u + h).basepoint
        return abs(b.z - a.z) / (2 * h) / horocycle_flow(f, u).basepoint.y

    length, _ = quad(speed, 0.0, s) if s else (0.0, 0.0)
    assert abs(length) == pytest.approx(abs(s), rel=1e-4, abs=1e-6)
    assert dist(f.basepoint, horocycle_flow(f, s).basepoint) <= abs(s) + 1e-9


@given(frames, frames, mobius())
def test_frame_dist_is_left_invariant(f, g, h):
    a = frame_dist(f, g)
    assert frame_dist(f.translate(h), g.translate(h)) == pytest.approx(a, rel=1e-6, abs=1e-6)
    assert frame_dist(g, f) == pytest.approx(a, rel=1e-9, abs=1e-9)


@given(frames, st.floats(0.0, 4.0), params)
def test_backward_ray_distance(f, t, s):
    assert dist_to_backward_ray(f, geodesic_flow(f, -t).basepoint) < 1e-7
    # a horocyclic move off the ray is at distance at most |s| from it
    p = horocycle_flow(f, s).basepoint
    assert dist_to_backward_ray(f, p) <= dist(p, f.basepoint) + 1e-9


def test_translate_is_a_left_action():
    f = Frame(Mobius.of(1.0, 2.0, 0.0, 1.0))
    g, h = Mobius.of(2.0, 1.0, 1.0, 1.0), Mobius.of(1.0, 0.0, 3.0, 1.0)
    assert f.translate(h).translate(g).m.isclose(f.translate(g @ h).m)
