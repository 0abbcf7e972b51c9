"""
Big -1 Jacobi polynomials.

Exact rational constructions of the family (recurrence, Gauss-series and
two-diagonal-basis forms), orthogonality on the two-interval support,
spectral transforms, the q -> -1 and Bannai-Ito limits, and the
anticommutator algebra at q = -1.
"""

from .awalgebra import dual_realization, op_X, op_Y, op_Z, verify_anticommutators, verify_casimir
from .bigm1 import (
    RecurrencePair,
    WeightSpec,
    explicit_form,
    generate,
    hyp_2f1_terminating,
    limit_AC,
    recurrence_coeffs,
    weight,
)
from .dunkl import FamilyParams, apply_L0, eigenvalue_lambda, l0_matrix, phi_basis, pn_via_phi
from .errors import (
    BigJacobiError,
    ConvergenceError,
    DegenerateDenominatorError,
    DegenerateSpectrumError,
    DomainError,
    InconsistencyError,
    ParameterError,
    PoleError,
    ScalarKindError,
    ZeroAtNodeError,
)
from .limits import BIParams, QParams, apply_Lq, bannai_ito_AC, bi_convergence, bi_grid, bi_limit_params, q_jacobi_AC
from .numeric import Polynomial
from .orthogonality import gauss_jacobi_rule, gram_check, inner_product, moment, point_mass_test
from .report import VerificationReport
from .suites import run_suite
from .transforms import MonicOPS, christoffel, geronimus_link, geronimus_reconstruct, interleave

__version__ = "0.1.0"

__all__ = [
    "BIParams", "BigJacobiError", "ConvergenceError", "DegenerateDenominatorError", "DegenerateSpectrumError",
    "DomainError", "FamilyParams", "InconsistencyError", "MonicOPS", "ParameterError", "PoleError",
    "Polynomial", "QParams", "RecurrencePair", "ScalarKindError", "VerificationReport", "WeightSpec",
    "ZeroAtNodeError", "apply_L0", "apply_Lq", "bannai_ito_AC", "bi_convergence", "bi_grid",
    "bi_limit_params", "christoffel", "dual_realization", "eigenvalue_lambda", "explicit_form",
    "gauss_jacobi_rule", "generate", "geronimus_link", "geronimus_reconstruct", "gram_check",
    "hyp_2f1_terminating", "inner_product", "interleave", "l0_matrix", "limit_AC", "moment", "op_X", "op_Y",
    "op_Z", "phi_basis", "pn_via_phi", "point_mass_test", "q_jacobi_AC", "recurrence_coeffs", "run_suite",
    "verify_anticommutators", "verify_casimir", "weight",
]
