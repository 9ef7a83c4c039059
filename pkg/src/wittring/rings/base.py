"""Ring descriptors and the element wrapper.

A ``Ring`` object describes a commutative ring and implements its arithmetic on
*payloads*: canonical, hashable, immutable data.  ``RingElement`` pairs a ring
with a payload and supplies the operator overloads.  Two elements are equal iff
their rings are equal and their payloads are identical.
"""

from __future__ import annotations

from typing import Any, Iterator

from gmpy2 import mpq

from ..errors import DescriptorMismatch, NotAUnit, NotDivisible


class Ring:
    """Abstract commutative ring with canonical payloads."""

    #: no nonzero element is killed by a nonzero integer
    torsion_free = True
    #: payloads are numbers supporting native ``+ - *`` with no reduction step
    native = False
    #: contains the rationals (every nonzero integer is a unit)
    contains_q = False

    # -- descriptor identity -------------------------------------------------
    def _key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        return type(other) is type(self) and other._key() == self._key()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._key()))

    def spec(self) -> str:
        """Ring description in the textual ring grammar."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<ring {self.spec()}>"

    # -- payload arithmetic --------------------------------------------------
    def zero(self) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def pow(self, a, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.one()
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def from_int(self, n: int):
        return self.from_rational(mpq(n))

    def from_rational(self, q):
        """Image of the rational ``q`` under the structure map; ``NotAUnit`` if undefined."""
        raise NotImplementedError

    def scale(self, a, q):
        """Multiply a payload by the rational ``q``."""
        return self.mul(a, self.from_rational(q))

    def exact_divide(self, a, n: int):
        """Payload ``y`` with ``n * y = a``; raises ``NotDivisible``."""
        raise NotImplementedError

    def invert_integer(self, n: int):
        if n == 0:
            raise NotAUnit("0 is not a unit")
        try:
            return self.from_rational(mpq(1, n))
        except NotAUnit:
            raise NotAUnit(f"{n} is not a unit in {self.spec()}") from None

    def has_torsion(self, n: int) -> bool:
        """True if some nonzero element is killed by ``n``."""
        return False

    def is_zs_algebra(self, primes) -> bool:
        """True if every prime outside ``primes`` is invertible here."""
        return False

    def render(self, a) -> str:
        raise NotImplementedError

    def sort_key(self, a):
        return a

    def elements(self) -> Iterator[Any]:
        raise TypeError(f"{self.spec()} is not enumerable")

    @property
    def is_finite(self) -> bool:
        return False

    # -- element-level convenience ------------------------------------------
    def __call__(self, value) -> "RingElement":
        if isinstance(value, RingElement):
            if value.ring == self:
                return value
            raise DescriptorMismatch(f"{value.ring.spec()} element given where {self.spec()} expected")
        if isinstance(value, str):
            from .parse import parse_element

            return parse_element(self, value)
        if isinstance(value, int) or type(value).__name__ in ("mpz", "mpq", "Fraction"):
            return RingElement(self, self.from_rational(mpq(value)))
        raise TypeError(f"cannot coerce {value!r} into {self.spec()}")

    def wrap(self, payload) -> "RingElement":
        return RingElement(self, payload)

    def zero_element(self) -> "RingElement":
        return RingElement(self, self.zero())

    def one_element(self) -> "RingElement":
        return RingElement(self, self.one())

    def parse(self, text: str, names: dict | None = None) -> "RingElement":
        from .parse import parse_element

        return parse_element(self, text, names)

    def generators(self) -> dict[str, "RingElement"]:
        """Named algebra generators usable in parsed expressions."""
        return {}


class RingElement:
    """An element of a described ring."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def _other(self, other) -> Any:
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise DescriptorMismatch(
                    f"cannot combine {self.ring.spec()} with {other.ring.spec()}")
            return other.value
        if isinstance(other, int) or type(other).__name__ in ("mpz", "mpq", "Fraction"):
            return self.ring.from_rational(mpq(other))
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        return RingElement(self.ring, self.ring.pow(self.value, int(k)))

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ring.from_int(other)
        return NotImplemented

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash(self.value)

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def exact_divide(self, n: int) -> "RingElement":
        return RingElement(self.ring, self.ring.exact_divide(self.value, n))

    def scale(self, q) -> "RingElement":
        return RingElement(self.ring, self.ring.scale(self.value, mpq(q)))

    def __str__(self) -> str:
        return self.ring.render(self.value)

    def __repr__(self) -> str:
        return f"{self.ring.render(self.value)} in {self.ring.spec()}"


def exact_divide(x: RingElement, n: int) -> RingElement:
    """The unique ``y`` with ``n*y = x``; raises ``NotDivisible`` otherwise."""
    return x.exact_divide(n)


def invert_integer(n: int, ring: Ring) -> RingElement:
    """Inverse of ``n * 1`` in ``ring``; raises ``NotAUnit``."""
    return RingElement(ring, ring.invert_integer(n))


__all__ = ["Ring", "RingElement", "exact_divide", "invert_integer", "NotDivisible", "NotAUnit"]
