"""Scalar rings: Z, Z_S, Q and Z/m."""

from __future__ import annotations

from math import gcd

from gmpy2 import mpq

from ..errors import NotApplicable, NotAUnit, NotDivisible
from ..trunc import PrimeSet, factorize
from .base import Ring

ZERO = mpq(0)
ONE = mpq(1)


class RationalLike(Ring):
    """Subring of Q given by the denominators it admits; payloads are ``mpq``."""

    native = True

    def admits(self, denominator: int) -> bool:
        raise NotImplementedError

    def contains(self, q) -> bool:
        return self.admits(int(mpq(q).denominator))

    def zero(self):
        return ZERO

    def one(self):
        return ONE

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return not a

    def pow(self, a, k: int):
        return a**k

    def from_rational(self, q):
        q = mpq(q)
        if not self.admits(int(q.denominator)):
            raise NotAUnit(f"{q.denominator} is not a unit in {self.spec()}")
        return q

    def scale(self, a, q):
        return a * self.from_rational(q)

    def exact_divide(self, a, n: int):
        if n == 0:
            raise NotDivisible("division by zero")
        q = a / n
        if not self.admits(int(q.denominator)):
            raise NotDivisible(f"not divisible: {a} by {n} in {self.spec()}")
        return q

    def render(self, a) -> str:
        return str(a)

    def tensor_q(self) -> "Rationals":
        return Rationals()


class Integers(RationalLike):
    def _key(self):
        return ()

    def admits(self, denominator: int) -> bool:
        return denominator == 1

    def spec(self) -> str:
        return "ZZ"


class Rationals(RationalLike):
    contains_q = True

    def _key(self):
        return ()

    def admits(self, denominator: int) -> bool:
        return True

    def is_zs_algebra(self, primes) -> bool:
        return True

    def spec(self) -> str:
        return "QQ"


class SLocalIntegers(RationalLike):
    """``Z_S = Z[1/q : q not in P]``: rationals whose denominators avoid ``P``."""

    def __init__(self, primes: PrimeSet | tuple | list = ()):
        self.primes = primes if isinstance(primes, PrimeSet) else PrimeSet(primes)
        self._radical = self.primes.radical
        # Z with every prime inverted is Q
        self.contains_q = not self.primes.primes

    def _key(self):
        return self.primes.primes

    def admits(self, denominator: int) -> bool:
        return gcd(denominator, self._radical) == 1

    def is_zs_algebra(self, primes) -> bool:
        return set(self.primes.primes) <= set(primes.primes)

    def spec(self) -> str:
        return "ZS(" + ",".join(map(str, self.primes.primes)) + ")"


class Residue(Ring):
    """``Z/m`` with payloads in ``[0, m)``.

    Passing ``primes`` checks at construction that ``Z/m`` is a ``Z_S``-algebra,
    i.e. every prime factor of ``m`` lies in ``primes``.
    """

    torsion_free = False

    def __init__(self, modulus: int, primes: PrimeSet | None = None):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.modulus = int(modulus)
        self.torsion_free = self.modulus == 1
        if primes is not None and not self.is_zs_algebra(primes):
            raise NotApplicable(
                f"ZZ/{modulus} is not a Z_S-algebra for P={list(primes.primes)}: "
                "every prime factor of the modulus must lie in P")

    def _key(self):
        return (self.modulus,)

    def spec(self) -> str:
        return f"ZZ/{self.modulus}"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def is_zero(self, a) -> bool:
        return a == 0

    def pow(self, a, k: int):
        return pow(a, k, self.modulus)

    def from_int(self, n: int):
        return int(n) % self.modulus

    def from_rational(self, q):
        q = mpq(q)
        num, den = int(q.numerator), int(q.denominator)
        if gcd(den, self.modulus) != 1:
            raise NotAUnit(f"{den} is not a unit in {self.spec()}")
        return num * pow(den, -1, self.modulus) % self.modulus

    def exact_divide(self, a, n: int):
        if gcd(n, self.modulus) != 1:
            raise NotDivisible(
                f"not divisible: {a} by {n} in {self.spec()} (division is not unique with torsion)")
        return a * pow(n, -1, self.modulus) % self.modulus

    def has_torsion(self, n: int) -> bool:
        return gcd(n, self.modulus) > 1

    def is_zs_algebra(self, primes) -> bool:
        return all(p in primes for p, _ in factorize(self.modulus))

    def render(self, a) -> str:
        return str(a)

    def elements(self):
        return iter(range(self.modulus))

    @property
    def is_finite(self) -> bool:
        return True

    def tensor_q(self):
        raise NotApplicable(f"{self.spec()} has no rational extension (it is torsion)")
