import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import boundary_reals, mobius, points
from horokit.core import INFINITY, Geodesic, Point, Real, dist, intersection
from horokit.isometry import (
    AxisMiss,
    DegenerateAxis,
    DegenerateLength,
    IsIdentity,
    Kind,
    Mobius,
    NotHyperbolic,
    axis,
    classify,
    fixed_points,
    from_axis_length,
    geodesic_matrix,
    horocycle_matrix,
    pairing_isometry,
    translation_length,
)

I = Point(0.0, 1.0)


def test_normalization_fixes_determinant_and_sign():
    m = Mobius.of(-4.0, -2.0, -2.0, -2.0)
    assert (m.a, m.b, m.c, m.d) == pytest.approx((2.0, 1.0, 1.0, 1.0))
    with pytest.raises(ValueError):
        Mobius.of(1.0, 2.0, 2.0, 1.0)


def test_fixed_points_of_cat_map():
    m = Mobius.of(2.0, 1.0, 1.0, 1.0)
    assert classify(m) is Kind.HYPERBOLIC
    rep, att = axis(m)
    assert rep.x == pytest.approx((1 - math.sqrt(5)) / 2)
    assert att.x == pytest.approx((1 + math.sqrt(5)) / 2)


def test_translation_length_of_diagonal():
    assert translation_length(Mobius.of(2.0, 0.0, 0.0, 0.5)) == pytest.approx(2 * math.log(2))
    assert axis(Mobius.of(2.0, 0.0, 0.0, 0.5)) == (Real(0.0), INFINITY)


def test_classification():
    assert classify(Mobius.identity()) is Kind.IDENTITY
    assert classify(Mobius.of(1.0, 1.0, 0.0, 1.0)) is Kind.PARABOLIC
    assert classify(Mobius.of(0.0, -1.0, 1.0, 0.0)) is Kind.ELLIPTIC
    assert fixed_points(Mobius.of(1.0, 1.0, 0.0, 1.0)) == (INFINITY,)
    assert fixed_points(Mobius.of(1.0, 0.0, 1.0, 1.0))[0].x == pytest.approx(0.0)
    assert fixed_points(Mobius.of(0.0, -1.0, 1.0, 0.0)) == ()
    with pytest.raises(IsIdentity):
        fixed_points(Mobius.identity())
    with pytest.raises(NotHyperbolic):
        translation_length(Mobius.of(1.0, 1.0, 0.0, 1.0))


def test_from_axis_length_rejects_degenerate_input():
    with pytest.raises(DegenerateAxis):
        from_axis_length(Real(1.0), Real(1.0), 1.0)
    with pytest.raises(DegenerateLength):
        from_axis_length(Real(0.0), Real(1.0), 0.0)


def test_pairing_of_two_unit_circles():
    # circles centered at 3 and -1; the pairing sends the crossing point on one to the other
    A, B = Geodesic(Real(2.0), Real(4.0)), Geodesic(Real(-2.0), Real(0.0))
    line = Geodesic(Real(3.0), Real(-1.0))
    g = pairing_isometry(Real(3.0), Real(-1.0), A, B)
    P, N = intersection(line, A), intersection(line, B)
    assert dist(g.apply(P), N) < 1e-12
    assert dist(P, N) == pytest.approx(2.7081, abs=1e-4)
    assert Geodesic(g.apply(Real(2.0)), g.apply(Real(4.0))).same_as(B)
    # infinity lies outside A, so it must land inside B
    assert -2.0 < g.apply(INFINITY).x < 0.0
    # the map moves P by d(P, N) but translates its own axis by less
    assert translation_length(g) <= dist(P, N) + 1e-12


def test_pairing_needs_a_crossing_axis():
    A, B = Geodesic(Real(2.0), Real(4.0)), Geodesic(Real(-2.0), Real(0.0))
    with pytest.raises(AxisMiss):
        pairing_isometry(Real(10.0), Real(20.0), A, B)


@given(mobius(), mobius())
def test_composition_matches_successive_application(m, n):
    z = Point(0.3, 1.7)
    assert dist((m @ n).apply(z), m.apply(n.apply(z))) < 1e-8


@given(mobius(), points, points)
def test_mobius_acts_by_isometries(m, p, q):
    assert dist(m.apply(p), m.apply(q)) == pytest.approx(dist(p, q), rel=1e-6, abs=1e-6)


@given(mobius())
def test_inverse(m):
    assert (m @ m.inverse()).isclose(Mobius.identity(), 1e-9)


@given(mobius(), mobius())
def test_trace_is_conjugation_invariant(m, h):
    assert abs(m.conjugate(h).trace) == pytest.approx(abs(m.trace), rel=1e-8, abs=1e-8)


@given(boundary_reals, boundary_reals, st.floats(0.05, 6.0))
def test_axis_length_round_trip(p, q, ell):
    assume(abs(p.x - q.x) > 1e-3)
    g = from_axis_length(p, q, ell)
    rep, att = axis(g)
    assert rep.isclose(p, 1e-6) and att.isclose(q, 1e-6)
    assert translation_length(g) == pytest.approx(ell, rel=1e-6)
    # points on the axis move by exactly ell
    on_axis = intersection(Geodesic(p, q), Geodesic(Real(0.5 * (p.x + q.x)), INFINITY))
    assert dist(on_axis, g.apply(on_axis)) == pytest.approx(ell, rel=1e-6)


@given(boundary_reals, st.floats(0.05, 6.0))
def test_axis_with_infinity(p, ell):
    g = from_axis_length(p, INFINITY, ell)
    assert axis(g)[1] == INFINITY and axis(g)[0].isclose(p, 1e-9)


@given(st.floats(-5, 5), st.floats(-5, 5))
def test_one_parameter_subgroups(t, s):
    assert (geodesic_matrix(t) @ geodesic_matrix(s)).isclose(geodesic_matrix(t + s), 1e-9)
    assert (horocycle_matrix(t) @ horocycle_matrix(s)).isclose(horocycle_matrix(t + s), 1e-9)


@given(st.floats(-5, 5), st.floats(-5, 5))
def test_geodesic_conjugates_horocycle(t, s):
    lhs = geodesic_matrix(t) @ horocycle_matrix(s)
    rhs = horocycle_matrix(s * math.exp(-t)) @ geodesic_matrix(t)
    assert lhs.isclose(rhs, 1e-9)


def test_boundary_image_that_overflows_is_infinity():
    m = Mobius(1.0, 0.0, 5e-324, 1.0)
    assert m.apply(INFINITY).is_infinity
