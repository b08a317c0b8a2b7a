"""Exact computations of nef and Mori cones of Hilbert schemes of points on
Mori dream K3 surfaces of Picard rank two."""
from .bridgeland import gieseker_candidates, gieseker_wall_case1, wall
from .cone import Pairing, RatCone, cone_equal, contains, dual_cone
from .errors import (
    BelowThreshold,
    HypothesisNotMet,
    K3NefError,
    PreconditionError,
    ThresholdNotMet,
)
from .hilb import (
    HCurve,
    HDiv,
    lambda_case1_closed_form,
    lambda_cone,
    min_threshold_n,
    mori_cone_hilb,
    nef_cone_hilb,
    pair_hilb,
    threshold_holds,
)
from .nested import nested_nef_generators, nested_verify
from .picard import Case, Div, SurfaceK3, genus_adjunction, intersect, make_surface, nef_cone_X

__version__ = "0.1.0"
