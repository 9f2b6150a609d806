"""Exact ampleness tests and Seshadri constants on blow-ups of the seven
types of hyperelliptic surfaces."""

from .catalog import SURFACE_TABLE, SurfaceData, is_odd_type, surface_params
from .lattice import (
    Bound,
    DivisorClass,
    FibreKind,
    RationalBound,
    SqrtBound,
    compare_bounds,
    fibre_class,
    intersect,
    self_intersection,
    seshadri_ratio,
)
from .positivity import (
    AmpleVerdict,
    Outcome,
    Status,
    decide_ample,
    homogeneous_ample,
    kuchle_ample,
    min_k_for,
    necessary_checks,
    nef_for_d,
    nonhomogeneous_ample,
)
from .seshadri import (
    AttainingCurve,
    Certificate,
    Hypothesis,
    Locus,
    PointConfig,
    ResultStatus,
    SeshadriResult,
    global_constant,
    multipoint_general,
    multipoint_special,
    point_on_locus,
    very_general_point,
)
from .oracle import (
    CapForm,
    ConstraintSet,
    OracleReport,
    min_ratio_over_box,
    run_verifier,
    verify_global_witness,
    verify_multipoint_formula,
    verify_single_point_chain,
)

__version__ = "0.1.0"
