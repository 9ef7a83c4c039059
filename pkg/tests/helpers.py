"""Hypothesis strategies and small builders shared by the test modules."""

from gmpy2 import mpq
from hypothesis import strategies as st

from wittring.rings import MonoidAlgebra, PolynomialRing, RingElement
from wittring.trunc import PrimeSet, s_part
from wittring.witt import WittVector


def unit_denominators(primes: PrimeSet, bound: int = 40) -> list[int]:
    return [d for d in range(1, bound) if s_part(d, primes) == 1]


def zs_rationals(primes: PrimeSet, size: int = 5):
    return st.builds(lambda n, d: mpq(n, d), st.integers(-size, size),
                     st.sampled_from(unit_denominators(primes, 12)))


def scalars(ring, size: int = 5):
    """Elements of a scalar ring (Z, Z_S, Q or Z/m)."""
    if hasattr(ring, "modulus"):
        return st.integers(0, ring.modulus - 1).map(lambda v: RingElement(ring, v))
    primes = getattr(ring, "primes", None)
    if primes is None or ring.spec() == "ZZ":
        return st.integers(-size, size).map(ring)
    return zs_rationals(primes if isinstance(primes, PrimeSet) else PrimeSet(primes), size).map(ring)


def polynomials(B: PolynomialRing, max_degree: int = 3, size: int = 4):
    """Univariate-or-multivariate polynomials with small coefficients."""
    nv = B.nvars

    def build(terms):
        acc = {}
        for exps, c in terms:
            acc[exps] = acc.get(exps, 0) + c
        return RingElement(B, B.from_dict({e: B.coeffs.from_rational(mpq(c)) for e, c in acc.items()}))

    exps = st.tuples(*[st.integers(0, max_degree)] * nv)
    return st.lists(st.tuples(exps, st.integers(-size, size)), max_size=4).map(build)


def monoid_elements(B: MonoidAlgebra, basis, max_support: int = 3, size: int = 3):
    basis = list(basis)

    def build(pairs):
        acc = {}
        for r, c in pairs:
            acc[r] = acc.get(r, 0) + c
        return RingElement(B, B.from_dict({r: B.coeffs.from_int(c) for r, c in acc.items()}))

    return st.lists(st.tuples(st.sampled_from(basis), st.integers(-size, size)),
                    max_size=max_support).map(build)


def witt_vectors(ring, truncation, elements):
    return st.lists(elements, min_size=len(truncation), max_size=len(truncation)).map(
        lambda cs: WittVector(ring, truncation, tuple(cs)))
