"""Hyperbolic plane toolkit for horocycle flows on Schottky quotients."""

from .core import (
    DEFAULT_TOL,
    INFINITY,
    BoundaryPoint,
    Geodesic,
    Horoball,
    HorokitError,
    NoIntersection,
    Point,
    Real,
    angle_between,
    busemann,
    disk_to_halfplane,
    dist,
    dist_to_geodesic,
    halfplane_to_disk,
    intersection,
    reflect,
)
from .flows import Frame, endpoints, frame_dist, frame_from_endpoints, geodesic_flow, horocycle_flow
from .isometry import (
    Kind,
    Mobius,
    apply,
    classify,
    fixed_points,
    from_axis_length,
    pairing_isometry,
    translation_length,
)
from .schottky import (
    OrbitPoint,
    Pair,
    PairedCircle,
    SchottkySpec,
    Word,
    enumerate_orbit,
    one_sided_accumulation,
    reduce_point,
    sample_limit_set,
    verify_ping_pong,
)

__version__ = "0.1.0"
