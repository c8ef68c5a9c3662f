"""Exact symbolic quantum-group engine: noncommutative polynomials over
rational functions in v = q^{1/2} with normal ordering, and verifiers for
the integer-power identity reductions."""

from .coeffs import V, V_TILDE, canon, gauss_binomial, is_zero, qpow
from .ncpoly import (
    AlgebraPreset,
    NCPoly,
    NCTensor,
    RewriteError,
    commuting_pair_preset,
    coproduct,
    coproduct_on_leg,
    divided_power,
    nonsimple_root_poly,
    qweyl_pair_preset,
    sl2_preset,
    sl3_preset,
)
from .checks import (
    verify_commuting_cases,
    verify_coproduct_hom,
    verify_kac,
    verify_mixed_commutators,
    verify_qbinomial,
    verify_serre_sum,
)

__all__ = [
    "V",
    "V_TILDE",
    "canon",
    "gauss_binomial",
    "is_zero",
    "qpow",
    "AlgebraPreset",
    "NCPoly",
    "NCTensor",
    "RewriteError",
    "commuting_pair_preset",
    "coproduct",
    "coproduct_on_leg",
    "divided_power",
    "nonsimple_root_poly",
    "qweyl_pair_preset",
    "sl2_preset",
    "sl3_preset",
    "verify_commuting_cases",
    "verify_coproduct_hom",
    "verify_kac",
    "verify_mixed_commutators",
    "verify_qbinomial",
    "verify_serre_sum",
]
