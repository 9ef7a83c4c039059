"""Exact arithmetic for truncated big Witt vectors and the lambda-rings built from Frobenius lifts."""

from .errors import (DescriptorMismatch, DualPathMismatch, IntegralityError, NotAUnit,
                     NotApplicable, NotDivisible, ParseError, WittError)
from .kernel import (KernelProblem, KernelResult, alpha, ideal_power_membership,
                     in_kernel_direct, in_kernel_ghost, in_kernel_lambda)
from .lambda_ring import AdamsContext, MonoidAdamsContext, dwork_product
from .problem import ProblemFile
from .rings import parse_ring
from .trunc import MultiIndex, PrimeSet, TruncationSet, s_partitions, s_truncation
from .witt import (GhostVector, LambdaSeries, WittVector, frobenius, from_ghost, ghost,
                   lambda_to_witt, phi_bar, phi_s, teichmuller, verschiebung, witt_to_lambda)

__version__ = "0.1.0"

__all__ = [
    "WittError", "DescriptorMismatch", "DualPathMismatch", "IntegralityError", "NotAUnit",
    "NotApplicable", "NotDivisible", "ParseError",
    "PrimeSet", "TruncationSet", "MultiIndex", "s_partitions", "s_truncation", "parse_ring",
    "WittVector", "GhostVector", "LambdaSeries", "ghost", "from_ghost", "teichmuller",
    "frobenius", "verschiebung", "phi_s", "phi_bar", "witt_to_lambda", "lambda_to_witt",
    "AdamsContext", "MonoidAdamsContext", "dwork_product",
    "KernelProblem", "KernelResult", "alpha", "in_kernel_lambda", "in_kernel_ghost",
    "in_kernel_direct", "ideal_power_membership", "ProblemFile",
]
