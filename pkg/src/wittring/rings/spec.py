"""Textual ring descriptors.

Grammar (whitespace ignored)::

    ring    := atom ("[" names "]")*
    atom    := "ZZ" | "QQ" | "ZS" ["(" primes ")"] | "ZZ/" INT
             | scalars "{" monoid "}" | "Q(" ring ")"
    scalars := "ZS" ["(" primes ")"] | "QQ"
    monoid  := NAME | ring

``ZS`` without explicit primes takes the ambient prime set.  ``scalars{M}`` is
the monoid algebra over the multiplicative monoid of the ring ``M`` (or of a
named table monoid).  ``R[X,Y]`` is a polynomial ring, ``Q(B)`` is ``B (x) Q``.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from ..trunc import PrimeSet
from .base import Ring
from .extension import RationalExtension
from .monoid import Monoid, MonoidAlgebra, RingMonoid
from .polynomial import PolynomialRing
from .scalars import Integers, Rationals, Residue, SLocalIntegers


class _SpecParser:
    def __init__(self, text: str, primes: PrimeSet, monoids: dict[str, Monoid]):
        self.s = re.sub(r"\s+", "", text)
        self.i = 0
        self.primes = primes
        self.monoids = monoids
        self.validate = True

    def error(self, msg: str):
        raise ParseError(f"bad ring spec {self.s!r} at {self.i}: {msg}")

    def eat(self, lit: str) -> bool:
        if self.s.startswith(lit, self.i):
            self.i += len(lit)
            return True
        return False

    def need(self, lit: str):
        if not self.eat(lit):
            self.error(f"expected {lit!r}")

    def integer(self) -> int:
        m = re.compile(r"\d+").match(self.s, self.i)
        if not m:
            self.error("expected an integer")
        self.i = m.end()
        return int(m.group())

    def name(self) -> str:
        m = re.compile(r"[A-Za-z_][A-Za-z0-9_]*").match(self.s, self.i)
        if not m:
            self.error("expected a name")
        self.i = m.end()
        return m.group()

    def primes_opt(self) -> PrimeSet:
        if not self.eat("("):
            return self.primes
        ps = []
        if not self.eat(")"):
            ps.append(self.integer())
            while self.eat(","):
                ps.append(self.integer())
            self.need(")")
        return PrimeSet(ps)

    def ring(self) -> Ring:
        r = self.atom()
        while self.eat("["):
            names = [self.name()]
            while self.eat(","):
                names.append(self.name())
            self.need("]")
            r = PolynomialRing(r, names)
        return r

    def monoid(self) -> Monoid:
        save = self.i
        m = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?=\})").match(self.s, self.i)
        if m and m.group() in self.monoids:
            self.i = m.end()
            return self.monoids[m.group()]
        self.i = save
        # a ring used only as a monoid need not be a Z_S-algebra
        outer, self.validate = self.validate, False
        try:
            return RingMonoid(self.ring())
        finally:
            self.validate = outer

    def atom(self) -> Ring:
        if self.eat("Q("):
            base = self.ring()
            self.need(")")
            return RationalExtension(base)
        if self.eat("ZZ/"):
            return Residue(self.integer(), self.primes if self.validate else None)
        if self.eat("ZZ"):
            return Integers()
        if self.eat("QQ"):
            if self.eat("{"):
                mono = self.monoid()
                self.need("}")
                return MonoidAlgebra(self.primes, mono, Rationals())
            return Rationals()
        if self.eat("ZS"):
            ps = self.primes_opt()
            if self.eat("{"):
                mono = self.monoid()
                self.need("}")
                return MonoidAlgebra(ps, mono)
            return SLocalIntegers(ps)
        self.error("unknown ring")


def parse_ring(text: str, primes: PrimeSet | None = None,
               monoids: dict[str, Monoid] | None = None) -> Ring:
    """Build a ring descriptor from its textual form."""
    p = _SpecParser(text, primes if primes is not None else PrimeSet(), monoids or {})
    r = p.ring()
    if p.i != len(p.s):
        p.error("trailing input")
    return r
