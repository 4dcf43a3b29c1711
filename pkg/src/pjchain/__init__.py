"""Exact multi-step rational extensions of the trigonometric Poschl-Teller
potential, built from one-parameter seed polynomial families, with their
admissible parameter regions, exceptional orthogonal eigenfamilies, and
independent analytic and numerical verification oracles."""

__version__ = "0.1.0"

from .chains import (
    ChainReport,
    ChainSpec,
    IntervalSet,
    one_step_interval,
    step_interval,
    validate_chain,
)
from .errors import (
    BadIndex,
    DegenerateDenominator,
    EndpointRoot,
    GaugeMismatch,
    IrregularChain,
    NegativeFactorial,
    NonRegularChain,
    PoleAtZ,
    SolverFailure,
    SweepOutsideRegularity,
    WindowViolation,
    WrongArity,
    ZeroPolynomial,
)
from .exactpoly import (
    ONE,
    X,
    ZERO,
    Rational,
    RatPoly,
    derivative,
    det_bareiss,
    falling_factorial,
    rational_from_str,
    rational_to_str,
    sturm_root_count,
    wronskian,
)
from .extension import (
    EigenParts,
    EOPFamily,
    RMatrix,
    boundary_det_closed_form,
    coeff_A,
    eigenfunction,
    eop,
    extended_potential,
    measure_weight,
    r_matrix,
    two_step_tuv,
)
from .parajacobi import (
    GaugeFactor,
    PJParams,
    affine_g,
    boundary_values,
    coeff_a,
    coeff_b,
    coeff_lambda_star,
    jacobi_poly,
    para_jacobi,
    para_jacobi_parts,
    pj_poly,
)
from .tdpt import (
    EnergyLevel,
    PotentialExpr,
    TDPTParams,
    energy,
    ground_state_gauge,
    potential_z,
    shape_invariance_check,
    spectrum_levels,
)
from .verify import (
    ResidualReport,
    SpectrumReport,
    fd_spectrum,
    gram_matrix,
    max_normalized_offdiag,
    nodeless,
    orthogonality_check,
    schrodinger_residual,
)

__all__ = [
    "__version__",
    # exactpoly
    "Rational", "RatPoly", "ZERO", "ONE", "X",
    "derivative", "wronskian", "sturm_root_count", "falling_factorial",
    "det_bareiss", "rational_to_str", "rational_from_str",
    # parajacobi
    "PJParams", "GaugeFactor", "para_jacobi", "para_jacobi_parts", "pj_poly",
    "jacobi_poly", "coeff_a", "coeff_b", "coeff_lambda_star", "affine_g",
    "boundary_values",
    # tdpt
    "TDPTParams", "EnergyLevel", "PotentialExpr", "potential_z", "energy",
    "ground_state_gauge", "shape_invariance_check", "spectrum_levels",
    # chains
    "ChainSpec", "IntervalSet", "ChainReport",
    "one_step_interval", "step_interval", "validate_chain",
    # extension
    "RMatrix", "EigenParts", "EOPFamily", "coeff_A", "r_matrix",
    "boundary_det_closed_form", "extended_potential", "eop", "two_step_tuv",
    "measure_weight", "eigenfunction",
    # verify
    "ResidualReport", "SpectrumReport", "schrodinger_residual", "nodeless",
    "fd_spectrum", "gram_matrix", "max_normalized_offdiag", "orthogonality_check",
    # errors
    "WindowViolation", "NegativeFactorial", "ZeroPolynomial", "EndpointRoot",
    "DegenerateDenominator", "IrregularChain", "NonRegularChain", "BadIndex",
    "WrongArity", "PoleAtZ", "GaugeMismatch", "SolverFailure",
    "SweepOutsideRegularity",
]
