"""Truncated big Witt vectors: ghost map, ring operations, F_k, V_k, phi_S and Lambda-series."""

from .ghost import (components_from_ghost, default_verschiebung_target, frobenius_ghost,
                    from_ghost, ghost, phi_s_ghost, restrict_ghost, stationary_m, t_l, t_m,
                    verschiebung_ghost)
from .ops import (frobenius, phi_bar, phi_s, phi_s_witt, pr, teichmuller, verschiebung,
                  witt_add, witt_mul, witt_neg, witt_one, witt_scalar, witt_sub, witt_zero)
from .series import (lambda_add, lambda_log_derivative, lambda_mul, lambda_to_witt,
                     series_mul, witt_to_lambda)
from .universal import UniversalFamily, family, universal_polynomial
from .vectors import GhostVector, LambdaSeries, WittVector

__all__ = [
    "components_from_ghost", "default_verschiebung_target", "frobenius_ghost", "from_ghost",
    "ghost", "phi_s_ghost", "restrict_ghost", "stationary_m", "t_l", "t_m", "verschiebung_ghost",
    "frobenius", "phi_bar", "phi_s", "phi_s_witt", "pr", "teichmuller", "verschiebung",
    "witt_add", "witt_mul", "witt_neg", "witt_one", "witt_scalar", "witt_sub", "witt_zero",
    "lambda_add", "lambda_log_derivative", "lambda_mul", "lambda_to_witt", "series_mul",
    "witt_to_lambda", "UniversalFamily", "family", "universal_polynomial",
    "GhostVector", "LambdaSeries", "WittVector",
]
