"""Exact-arithmetic toolkit for elliptic curve rank growth over cyclic sextic fields.

The package builds, from a rational point of an auxiliary surface attached to
an elliptic curve E/Q, a cyclic sextic extension K6/Q together with a point of
E(K6) whose Galois orbit certifies that the rank of E(K6) exceeds what the
proper subfields contribute.  Everything is computed over exact rationals.
"""

from .ecurve import (
    CurveModel,
    InfiniteOrderCertificate,
    Point,
    add,
    is_probably_infinite_order,
    mul,
    neg,
    rho,
    stabilizer_class,
    trace_under,
)
from .integers import is_square, is_squarefree, squarefree_part
from .numfield import (
    ConductorEstimate,
    CubicElement,
    CyclicCubicField,
    SexticElement,
    SexticField,
    cubic_conductor_heuristic,
    cubic_invert,
    galois_generator,
    is_isomorphic_cubic,
    sextic_galois_generator,
)
from .polynomial import (
    MultiPoly,
    UniPoly,
    cubic_discriminant,
    multipoly_equal,
    squarefree_decomposition,
)
from .s6 import (
    ClassificationFailure,
    DegenerateCubic,
    DegenerateRational,
    NotOnSurface,
    S6Point,
    SexticConstruction,
    delta_formula,
    intersection_cubic,
    orbit_classifier,
    point_to_sextic_field,
    s3_cover,
    s6_model,
    sextic_poly,
    twist_transport,
)

__version__ = "0.1.0"
