"""Padé approximants in rational, barycentric and partial-fraction form."""

from .barycentric import (
    BarycentricForm1,
    BarycentricForm2,
    barycentric_engine,
    bpa_form1,
    bpa_form2,
    bpta_form1,
    bpta_form2,
    convert_form1_to_form2,
    convert_form2_to_form1,
    eval_form1,
    eval_form2,
    expand_form1,
    expand_form2,
    interpolatory_form1,
    to_rational,
)
from .errors import (
    DegenerateDenominator,
    DegenerateDeterminant,
    InsufficientOrder,
    InvalidDenominator,
    InvalidInput,
    InvalidNodes,
    NoConvergence,
    NonDistinctNodes,
    NumericalFailure,
    PadeError,
    SingularMatrix,
    ZeroAtOrigin,
    ZeroDerivative,
    ZeroNode,
)
from .numkernel import Polynomial, poly_derivative, poly_eval, poly_roots, solve_dense
from .pade_core import (
    RationalFunction,
    classic_engine,
    expand_rational,
    pade,
    pade_denominator,
    pade_determinant_oracle,
    pade_type,
    pade_type_numerator,
    shift_denominator,
    shift_numerator,
)
from .prony import PartialFraction, orthogonality_residuals, pfpa, residues_via_derivative
from .series import (
    FormalPowerSeries,
    contact_order,
    exp_series,
    geometric_series,
    log1p_over_t_series,
    mul_truncated,
    partial_sum,
    perturb,
    tan_over_t_series,
)

__version__ = "0.1.0"
