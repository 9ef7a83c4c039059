"""``B (x) Q`` for torsion-free ``B`` with binomial coefficients and the integrality retraction."""

from __future__ import annotations

from gmpy2 import mpq

from ..errors import IntegralityError, NotApplicable
from .base import Ring, RingElement
from .monoid import MonoidAlgebra
from .polynomial import PolynomialRing
from .scalars import RationalLike


class RationalExtension(Ring):
    """``base (x) Q``; shares payloads with ``base`` so embedding is a re-tag."""

    contains_q = True
    torsion_free = True

    def __init__(self, base: Ring):
        if not base.torsion_free:
            raise NotApplicable(f"{base.spec()} has torsion; its rational extension loses information")
        self.base = base
        self.inner = base.tensor_q()

    def _key(self):
        return (self.base,)

    def spec(self) -> str:
        return f"Q({self.base.spec()})"

    def zero(self):
        return self.inner.zero()

    def one(self):
        return self.inner.one()

    def add(self, a, b):
        return self.inner.add(a, b)

    def neg(self, a):
        return self.inner.neg(a)

    def sub(self, a, b):
        return self.inner.sub(a, b)

    def mul(self, a, b):
        return self.inner.mul(a, b)

    def pow(self, a, k):
        return self.inner.pow(a, k)

    def is_zero(self, a):
        return self.inner.is_zero(a)

    def from_rational(self, q):
        return self.inner.from_rational(q)

    def scale(self, a, q):
        return self.inner.scale(a, q)

    def exact_divide(self, a, n):
        return self.inner.exact_divide(a, n)

    def is_zs_algebra(self, primes) -> bool:
        return True

    def render(self, a) -> str:
        return self.inner.render(a)

    def sort_key(self, a):
        return self.inner.sort_key(a)

    def generators(self):
        return {k: RingElement(self, v.value) for k, v in self.base.generators().items()}

    def embed(self, x: RingElement) -> RingElement:
        if x.ring != self.base:
            raise NotApplicable(f"{x.ring.spec()} is not the base {self.base.spec()}")
        return RingElement(self, x.value)

    def symbol(self, text: str) -> RingElement:
        return RingElement(self, self.base.symbol(text).value)


def rational_extension(base: Ring) -> Ring:
    """``base (x) Q``, or ``base`` itself when it already contains Q."""
    if base.contains_q:
        return base
    return RationalExtension(base)


def embed(x: RingElement, target: Ring) -> RingElement:
    """Move ``x`` into its rational extension ``target``."""
    if x.ring == target:
        return x
    if isinstance(target, RationalExtension):
        return target.embed(x)
    raise NotApplicable(f"cannot embed {x.ring.spec()} into {target.spec()}")


def _rational_coefficients(ring: Ring, payload):
    """Yield ``(location, rational)`` pairs for the coefficients of a payload of ``ring``."""
    if isinstance(ring, RationalLike):
        yield "constant term", payload
    elif isinstance(ring, PolynomialRing):
        for e, c in payload:
            for loc, q in _rational_coefficients(ring.coeffs, c):
                yield (ring._monomial(e) or "1") + ("" if loc == "constant term" else f" ({loc})"), q
    elif isinstance(ring, MonoidAlgebra):
        for r, c in payload:
            yield f"[{ring.monoid.render(r)}]", c
    else:
        raise NotApplicable(f"no coefficient notion for {ring.spec()}")


def integrality_check(x: RingElement, base: Ring) -> RingElement:
    """Retract ``x`` from ``base (x) Q`` to ``base``.

    Raises ``IntegralityError("non-integral coefficient ...")`` naming the
    offending monomial if some coefficient is not in the base scalars.
    """
    if x.ring == base:
        return x
    scalars = _scalar_ring(base)
    for loc, q in _rational_coefficients(base, x.value):
        if not scalars.contains(q):
            raise IntegralityError(
                f"non-integral coefficient {q} at {loc} in {x.ring.render(x.value)} "
                f"(not in {base.spec()})")
    return RingElement(base, x.value)


def _scalar_ring(ring: Ring) -> RationalLike:
    while not isinstance(ring, RationalLike):
        ring = ring.coeffs
    return ring


def binomial(x: RingElement, k: int) -> RingElement:
    """``x (x-1) ... (x-k+1) / k!`` in the rational extension of ``x``'s ring."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    A = rational_extension(x.ring)
    x = embed(x, A)
    out = A.one_element()
    for i in range(k):
        out = out * (x - i)
        out = out.scale(mpq(1, i + 1))
    return out
