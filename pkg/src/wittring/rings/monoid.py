"""Commutative monoids and monoid algebras ``Z_S R``.

Payload of a monoid-algebra element: tuple of ``(monoid_element, coefficient)``
pairs sorted by the monoid's key, zero coefficients dropped.  The element
``sum n_r [r]`` renders as ``n_1*[r_1] + ...``.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterable, Sequence

from ..errors import DescriptorMismatch, NotApplicable, NotDivisible, ParseError
from ..trunc import PrimeSet
from .base import Ring, RingElement
from .render import render_combination
from .scalars import Rationals, SLocalIntegers


class Monoid:
    """A commutative monoid acting as the basis of a monoid algebra."""

    unit = None

    def mul(self, a, b):
        raise NotImplementedError

    def pow(self, a, k: int):
        out = self.unit
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def key(self, a):
        return a

    def render(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def elements(self) -> list:
        raise TypeError("monoid is not finite")

    @property
    def is_finite(self) -> bool:
        return False

    def realize(self, a, target: Ring):
        """Payload of ``a`` in ``target`` (used by the augmentation)."""
        raise NotApplicable("this monoid has no realization in a ring")

    def _key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        return type(other) is type(self) and other._key() == self._key()

    def __hash__(self):
        return hash(self._key())


class FiniteMonoidTable(Monoid):
    """Explicitly tabulated finite commutative monoid with string labels."""

    def __init__(self, elements: Sequence[str], table, unit: str,
                 realization: dict | None = None):
        self.labels = tuple(str(e) for e in elements)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("repeated monoid labels")
        index = {e: i for i, e in enumerate(self.labels)}
        if isinstance(table, dict):
            tab = {(str(a), str(b)): str(c) for (a, b), c in table.items()}
        else:
            tab = {(a, b): str(table[i][j])
                   for i, a in enumerate(self.labels) for j, b in enumerate(self.labels)}
        for a, b in product(self.labels, repeat=2):
            if (a, b) not in tab:
                raise ValueError(f"multiplication table misses {a}*{b}")
            if tab[(a, b)] not in index:
                raise ValueError(f"{a}*{b} = {tab[(a, b)]} is not a monoid element")
        self.table = tab
        self.unit = str(unit)
        self._index = index
        self._check()
        self.realization = None
        if realization is not None:
            self.realization = {str(k): v for k, v in realization.items()}

    def _check(self) -> None:
        t, L = self.table, self.labels
        if self.unit not in self._index:
            raise ValueError("unit is not a monoid element")
        for a in L:
            if t[(self.unit, a)] != a:
                raise ValueError(f"unit law fails at {a}")
            for b in L:
                if t[(a, b)] != t[(b, a)]:
                    raise ValueError(f"not commutative at {a}, {b}")
                for c in L:
                    if t[(t[(a, b)], c)] != t[(a, t[(b, c)])]:
                        raise ValueError(f"not associative at {a}, {b}, {c}")

    @classmethod
    def from_ring(cls, ring: Ring) -> "FiniteMonoidTable":
        """Tabulate the multiplicative monoid of a finite ring."""
        elems = list(ring.elements())
        label = {e: ring.render(e) for e in elems}
        table = {(label[a], label[b]): label[ring.mul(a, b)] for a in elems for b in elems}
        return cls([label[e] for e in elems], table, label[ring.one()],
                   realization={label[e]: RingElement(ring, e) for e in elems})

    def _key(self):
        return (self.labels, tuple(sorted(self.table.items())), self.unit)

    def mul(self, a, b):
        return self.table[(a, b)]

    def key(self, a):
        return self._index[a]

    def render(self, a) -> str:
        return a

    def parse(self, text: str):
        text = text.strip()
        if text not in self._index:
            raise ParseError(f"unknown monoid element [{text}]")
        return text

    def elements(self) -> list:
        return list(self.labels)

    @property
    def is_finite(self) -> bool:
        return True

    def realize(self, a, target: Ring):
        if self.realization is None:
            raise NotApplicable("monoid table carries no realization map")
        v = self.realization[a]
        if v.ring != target:
            raise DescriptorMismatch(f"realization lives in {v.ring.spec()}, not {target.spec()}")
        return v.value

    def spec(self) -> str:
        return "table(" + ",".join(self.labels) + ")"


class RingMonoid(Monoid):
    """The multiplicative monoid ``(R, *)`` of a described ring; elements are payloads."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.unit = ring.one()

    def _key(self):
        return ("ring", self.ring)

    def mul(self, a, b):
        return self.ring.mul(a, b)

    def pow(self, a, k: int):
        return self.ring.pow(a, k)

    def key(self, a):
        return self.ring.sort_key(a)

    def render(self, a) -> str:
        return self.ring.render(a)

    def parse(self, text: str):
        return self.ring.parse(text).value

    def elements(self) -> list:
        return list(self.ring.elements())

    @property
    def is_finite(self) -> bool:
        return self.ring.is_finite

    def realize(self, a, target: Ring):
        if target != self.ring:
            raise DescriptorMismatch(
                f"monoid of {self.ring.spec()} does not realize in {target.spec()}")
        return a

    def spec(self) -> str:
        return self.ring.spec()


class MonoidAlgebra(Ring):
    """Free ``Z_S``-module on symbols ``[r]`` with ``[r][r'] = [r r']``."""

    def __init__(self, primes: PrimeSet, monoid: Monoid, coeffs: Ring | None = None):
        self.primes = primes if isinstance(primes, PrimeSet) else PrimeSet(primes)
        self.monoid = monoid
        self.coeffs = coeffs if coeffs is not None else SLocalIntegers(self.primes)
        self.torsion_free = self.coeffs.torsion_free
        self.contains_q = self.coeffs.contains_q

    def _key(self):
        return (self.primes.primes, self.monoid, self.coeffs)

    def spec(self) -> str:
        return f"{self.coeffs.spec()}{{{self.monoid.spec()}}}"

    def _canon(self, acc: dict) -> tuple:
        key = self.monoid.key
        iz = self.coeffs.is_zero
        return tuple(sorted(((r, c) for r, c in acc.items() if not iz(c)),
                            key=lambda t: key(t[0])))

    def zero(self):
        return ()

    def one(self):
        return ((self.monoid.unit, self.coeffs.one()),)

    def is_zero(self, a) -> bool:
        return not a

    def basis(self, r) -> tuple:
        """Payload of the symbol ``[r]``."""
        return ((r, self.coeffs.one()),)

    def basis_element(self, r) -> RingElement:
        return RingElement(self, self.basis(r))

    def symbol(self, text: str) -> RingElement:
        """Element ``[text]`` with ``text`` parsed by the monoid."""
        return self.basis_element(self.monoid.parse(text))

    def from_dict(self, terms: dict) -> tuple:
        return self._canon(dict(terms))

    def from_rational(self, q):
        c = self.coeffs.from_rational(q)
        return () if self.coeffs.is_zero(c) else ((self.monoid.unit, c),)

    def add(self, a, b):
        if not a:
            return b
        if not b:
            return a
        acc = dict(a)
        for r, c in b:
            acc[r] = acc[r] + c if r in acc else c
        return self._canon(acc)

    def neg(self, a):
        return tuple((r, -c) for r, c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        acc: dict = {}
        m = self.monoid.mul
        for r, c in a:
            for s, d in b:
                t = m(r, s)
                v = c * d
                acc[t] = acc[t] + v if t in acc else v
        return self._canon(acc)

    def scale(self, a, q):
        s = self.coeffs.from_rational(q)
        return self._canon({r: c * s for r, c in a})

    def exact_divide(self, a, n: int):
        out = []
        for r, c in a:
            try:
                out.append((r, self.coeffs.exact_divide(c, n)))
            except NotDivisible:
                raise NotDivisible(
                    f"not divisible: coefficient of [{self.monoid.render(r)}] in "
                    f"{self.render(a)} by {n}") from None
        return tuple(out)

    def is_zs_algebra(self, primes) -> bool:
        return self.coeffs.is_zs_algebra(primes)

    def tensor_q(self) -> "MonoidAlgebra":
        return MonoidAlgebra(self.primes, self.monoid, Rationals())

    def linear_map(self, a, target: Ring, on_basis: Callable, coeff_map=None):
        """Extend ``[r] -> on_basis(r)`` (target payloads) linearly."""
        if coeff_map is None:
            coeff_map = target.from_rational
        total = target.zero()
        for r, c in a:
            total = target.add(total, target.mul(coeff_map(c), on_basis(r)))
        return total

    def support(self, a) -> list:
        return [r for r, _ in a]

    def render(self, a) -> str:
        items = [(f"[{self.monoid.render(r)}]", c) for r, c in a]
        return render_combination(items, self.coeffs)

    def sort_key(self, a):
        return tuple((self.monoid.key(r), c) for r, c in a)


def augmentation(x: RingElement, target: Ring) -> RingElement:
    """``pi(sum n_r [r]) = sum n_r r`` in ``target``."""
    B = x.ring
    if not isinstance(B, MonoidAlgebra):
        raise NotApplicable("augmentation is defined on monoid algebras")
    return RingElement(target, B.linear_map(x.value, target,
                                            lambda r: B.monoid.realize(r, target)))


def elements_with_support(B: MonoidAlgebra, basis: Iterable, coefficients: Iterable[int],
                          max_support: int) -> Iterable[RingElement]:
    """Enumerate ``sum n_r [r]`` with at most ``max_support`` nonzero coefficients drawn
    from ``coefficients`` (zero excluded) over the given basis elements."""
    from itertools import combinations

    basis = list(basis)
    coeffs = [c for c in coefficients if c]
    yield B.zero_element()
    for k in range(1, max_support + 1):
        for support in combinations(basis, k):
            for cs in product(coeffs, repeat=k):
                yield RingElement(B, B.from_dict(
                    {r: B.coeffs.from_int(c) for r, c in zip(support, cs)}))
