"""Exact unimodality analysis of binomial coefficients along Pascal-triangle rays."""

__version__ = "0.1.0"

from .algebra import (
    RationalPolynomial,
    binomial,
    count_real_roots,
    integer_sqrt_floor,
    poly_gcd,
    real_rooted,
    square_free_decomposition,
)
from .errors import DomainError, InvariantViolation, UsageError
from .rays import (
    RayParams,
    RaySequence,
    Regime,
    RegimeTag,
    generate,
    line_origin,
    normalize,
    regime,
    subsequence,
)
from .props import (
    PropertyReport,
    argmax_scan,
    check_logconcave_step,
    classify,
    predicted_turning_point_vertical,
    ratio_sequence,
    shallow_diagonal,
    tanny_zuker_mode,
    turning_point,
    weak_turning_point,
)
from .delta_poly import (
    alternates_left_of,
    build_P,
    delta_value,
    fact1_check,
    first_positive_tail,
    interleaving_check,
    q_value,
)
from .lattice import Path, PathPair, enumerate_paths, injection_phi, verify_injectivity
from .pf import (
    Grid,
    PFReport,
    SweepOutcome,
    darroch_bounds,
    darroch_mean,
    generating_polynomial,
    is_pf,
    newton_check,
    pf_report,
    sweep_conjecture_pf,
    sweep_conjecture_ray_unimodal,
    sweep_conjecture_turning,
)
