"""Commutative rings with canonical forms: Z, Z_S, Q, Z/m, polynomials, monoid algebras."""

from .base import Ring, RingElement, exact_divide, invert_integer
from .extension import RationalExtension, binomial, embed, integrality_check, rational_extension
from .monoid import (FiniteMonoidTable, Monoid, MonoidAlgebra, RingMonoid, augmentation,
                     elements_with_support)
from .parse import parse_element, parse_tuple
from .polynomial import PolynomialRing
from .scalars import Integers, RationalLike, Rationals, Residue, SLocalIntegers
from .spec import parse_ring

__all__ = [
    "Ring", "RingElement", "exact_divide", "invert_integer",
    "RationalExtension", "binomial", "embed", "integrality_check", "rational_extension",
    "FiniteMonoidTable", "Monoid", "MonoidAlgebra", "RingMonoid", "augmentation",
    "elements_with_support", "parse_element", "parse_tuple", "PolynomialRing",
    "Integers", "RationalLike", "Rationals", "Residue", "SLocalIntegers", "parse_ring",
]
