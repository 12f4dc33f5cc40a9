import math
import sys

import pytest
from hypothesis import strategies as st

from horokit.core import Point, Real
from horokit.counterexample import CounterexampleConfig, Schedule, Variant, build
from horokit.isometry import Mobius, geodesic_matrix, horocycle_matrix

coord = st.floats(-20.0, 20.0, allow_nan=False, allow_infinity=False)
height = st.floats(-4.0, 4.0).map(math.exp)
points = st.builds(Point, coord, height)
boundary_reals = st.floats(-10.0, 10.0).map(Real)
params = st.floats(-3.0, 3.0)


def rotation(theta: float) -> Mobius:
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return Mobius.of(c, -s, s, c)


@st.composite
def mobius(draw):
    """Well-conditioned elements: rotation about i, then a_t, then n_s."""
    m = rotation(draw(st.floats(0.0, 2 * math.pi))) @ geodesic_matrix(draw(params)) @ horocycle_matrix(draw(params))
    return m


@pytest.fixture(scope="session")
def linear2():
    return build(CounterexampleConfig(Variant.TANGENT, Schedule.linear(), 2))


@pytest.fixture(scope="session")
def linear5():
    return build(CounterexampleConfig(Variant.TANGENT, Schedule.linear(), 5))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
