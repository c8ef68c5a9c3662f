"""Verification toolkit for the non-compact quantum dilogarithm, its
contour-integral identities, exact integer-power quantum-group identities,
and the difference-operator representation of the modular double of gl(N).
"""

__version__ = "0.1.0"

from .params import BParam, OmegaParams
from .quadrature import (
    DecayValidationError,
    NonConvergenceError,
    QuadratureConfig,
    QuadratureError,
    integrate_line,
)
from .report import CheckReport, summarize
from .qdilog import (
    PoleError,
    PoleZeroClass,
    check_asymptotics,
    classify,
    gb,
    gb_q_exponential,
    log_gb_strip,
    residue_coeff,
    residue_limit,
    shift_product,
)
from .identities import (
    ContourPlacementError,
    verify_45,
    verify_69,
    verify_tau_binomial,
)
from .suites import (
    integrals_suite,
    qdilog_suite,
    representation_suite,
    symbolic_suite,
)

__all__ = [
    "__version__",
    "BParam",
    "OmegaParams",
    "QuadratureConfig",
    "QuadratureError",
    "DecayValidationError",
    "NonConvergenceError",
    "integrate_line",
    "CheckReport",
    "summarize",
    "PoleError",
    "PoleZeroClass",
    "check_asymptotics",
    "classify",
    "gb",
    "gb_q_exponential",
    "log_gb_strip",
    "residue_coeff",
    "residue_limit",
    "shift_product",
    "ContourPlacementError",
    "verify_45",
    "verify_69",
    "verify_tau_binomial",
    "qdilog_suite",
    "integrals_suite",
    "symbolic_suite",
    "representation_suite",
]
