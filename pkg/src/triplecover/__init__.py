"""Exact models of degree-3 covers over Q and prime fields.

The package realizes one circle of ideas with exact arithmetic end to end:
a cover datum (a, b, c, d) determines three quadric relations, a rank-3
algebra with a trace-free plane of generators, a determinantal 3x2 matrix
whose rank-one locus is the total space, and a binary cubic cutting the
same cover out of a trivial P^1-bundle; contracting the matrix against a
direction resolves the fat ramification points with P^1 fibers.  Everything
is checked two ways: symbolically (polynomial identities reduce to zero)
and by brute-force point enumeration over small prime fields.
"""

from .checks import CheckResult, symbolic_suite
from .classify import (
    RamificationClass,
    branch_discriminant,
    cover_from_cubic,
    poly_gcd,
    ramification_class,
    root_multiplicity,
)
from .cover import (
    AlgebraElement,
    BinaryCubic,
    CoverData,
    DetMatrix,
    MinorsReport,
    jacobian_rank,
    quadric_residuals,
)
from .demos import (
    CensusReport,
    ConeExample,
    SmoothnessReport,
    cone_census,
    projective_points,
    quadric_cone,
    segre_cone,
    smoothness_probe,
)
from .errors import TripleCoverError
from .fields import Field, PrimeField, RationalField, Scalar, field_make, matrix_rank
from .poly import MultiPoly, parse_poly, parse_scalar
from .resolution import (
    FiberPoint,
    FiberReport,
    GraphPoint,
    LineMapReport,
    P1Point,
    cover_fiber,
    cubic_fiber,
    cubic_to_graph_point,
    cross_identities,
    fiber_report,
    graph_residuals,
    graph_to_cubic_point,
    line_map,
    line_map_oracle,
    on_cubic_locus,
    on_graph,
    p1_points,
    resolve_point,
)

__version__ = "0.1.0"
