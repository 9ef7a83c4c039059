"""Universal component polynomials of Witt-vector operations.

An operation whose ghost-side action is known is lifted to the torsion-free
ring ``Z_S[x_{i,d}]`` of universal inputs: its ghost image is computed there and
pulled back through the ghost map, one output index at a time.  The resulting
component polynomials are memoized per ``(operation, index)`` and can then be
evaluated over any ring, torsion or not.

Variables are interleaved by index (``x1, y1, x2, y2, ...``) so that enlarging
the working ring only pads exponent tuples.
"""

from __future__ import annotations

import threading
from typing import Callable

from ..rings.base import Ring, RingElement
from ..rings.polynomial import PolynomialRing
from ..rings.scalars import Integers, RationalLike, SLocalIntegers
from ..trunc import PrimeSet, divisors, s_part

_INPUT_NAMES = "xyzuvw"

GhostRule = Callable[[PolynomialRing, Callable[[int, int], tuple], int], tuple]


class UniversalFamily:
    """Lazily computed component polynomials of one operation.

    ``ghost_rule(ring, G, n)`` returns output ghost entry ``n`` as a payload of
    ``ring``, where ``G(i, m)`` is ghost entry ``m`` of universal input ``i``.
    ``need(n)`` is the largest input index output component ``n`` may involve.
    """

    def __init__(self, name: str, arity: int, ghost_rule: GhostRule,
                 scalars: RationalLike, need: Callable[[int], int]):
        self.name = name
        self.arity = arity
        self.ghost_rule = ghost_rule
        self.scalars = scalars
        self.need = need
        self._lock = threading.Lock()
        self._bound = 0
        self._ring: PolynomialRing | None = None
        self._ghosts: dict[tuple[int, int], tuple] = {}
        # published entries are never mutated
        self._components: dict[int, tuple] = {}
        self._compiled: dict[tuple[int, Ring], list] = {}

    def _names(self, bound: int) -> list[str]:
        return [f"{_INPUT_NAMES[i]}{d}" for d in range(1, bound + 1) for i in range(self.arity)]

    def _var(self, i: int, d: int) -> int:
        return (d - 1) * self.arity + i

    def _grow(self, bound: int) -> None:
        if bound <= self._bound:
            return
        bound = max(bound, 2 * self._bound)
        pad = (0,) * ((bound - self._bound) * self.arity)
        self._components = {n: tuple((e + pad, c) for e, c in p)
                            for n, p in self._components.items()}
        self._ring = PolynomialRing(self.scalars, self._names(bound))
        self._ghosts = {}
        self._compiled = {}
        self._bound = bound

    def _ghost(self, i: int, m: int) -> tuple:
        key = (i, m)
        g = self._ghosts.get(key)
        if g is None:
            nv = self._ring.nvars
            terms = {}
            for d in divisors(m):
                e = [0] * nv
                e[self._var(i, d)] = m // d
                terms[tuple(e)] = self.scalars.from_int(d)
            g = self._ring.from_dict(terms)
            self._ghosts[key] = g
        return g

    def _compute(self, n: int) -> None:
        R = self._ring
        acc = self.ghost_rule(R, self._ghost, n)
        for d in divisors(n)[:-1]:
            term = R.pow(self._components[d], n // d)
            if d != 1:
                term = R.mul(R.from_int(d), term)
            acc = R.sub(acc, term)
        self._components[n] = acc if n == 1 else R.exact_divide(acc, n)

    def component(self, n: int) -> tuple:
        """Payload of output component ``n`` in the current working ring."""
        with self._lock:
            if n not in self._components:
                self._grow(max(self.need(d) for d in divisors(n)))
                for d in divisors(n):
                    if d not in self._components:
                        self._compute(d)
            return self._components[n]

    def polynomial(self, n: int) -> RingElement:
        """Component ``n`` as an element of ``scalars[x1, y1, ..., x_k, y_k]`` with
        ``k = need(n)``."""
        payload = self.component(n)
        k = self.need(n)
        ring = PolynomialRing(self.scalars, self._names(k))
        width = k * self.arity
        return RingElement(ring, ring.from_dict({e[:width]: c for e, c in payload}))

    def _compiled_terms(self, n: int, target: Ring) -> list:
        payload = self.component(n)
        with self._lock:
            key = (n, target)
            terms = self._compiled.get(key)
            if terms is None:
                terms = []
                for e, c in payload:
                    tc = target.from_rational(c)
                    if target.is_zero(tc):
                        continue
                    factors = tuple((j % self.arity, j // self.arity + 1, k)
                                    for j, k in enumerate(e) if k)
                    terms.append((tc, factors))
                self._compiled[key] = terms
            return terms

    def evaluate(self, n: int, target: Ring, inputs: list[dict], powers: dict | None = None):
        """Evaluate component ``n`` at input components ``inputs[i][d]`` (payloads of ``target``)."""
        terms = self._compiled_terms(n, target)
        if powers is None:
            powers = {}
        mul, add = target.mul, target.add
        total = target.zero()
        for c, factors in terms:
            t = c
            for f in factors:
                p = powers.get(f)
                if p is None:
                    i, d, k = f
                    p = target.pow(inputs[i][d], k)
                    powers[f] = p
                t = mul(t, p)
            total = add(total, t)
        return total


def _add_rule(R, G, n):
    return R.add(G(0, n), G(1, n))


def _mul_rule(R, G, n):
    return R.mul(G(0, n), G(1, n))


def _neg_rule(R, G, n):
    return R.neg(G(0, n))


_families: dict[tuple, UniversalFamily] = {}
_registry_lock = threading.Lock()


def family(key: tuple) -> UniversalFamily:
    """The memoized family for ``("add",)``, ``("mul",)``, ``("neg",)``,
    ``("frobenius", k)`` or ``("phi_s", primes)``."""
    with _registry_lock:
        fam = _families.get(key)
        if fam is not None:
            return fam
        op = key[0]
        if op == "add":
            fam = UniversalFamily("add", 2, _add_rule, Integers(), lambda n: n)
        elif op == "mul":
            fam = UniversalFamily("mul", 2, _mul_rule, Integers(), lambda n: n)
        elif op == "neg":
            fam = UniversalFamily("neg", 1, _neg_rule, Integers(), lambda n: n)
        elif op == "frobenius":
            k = key[1]
            fam = UniversalFamily(f"frobenius_{k}", 1,
                                  lambda R, G, n: G(0, n * k), Integers(), lambda n: n * k)
        elif op == "phi_s":
            primes = PrimeSet(key[1])
            fam = UniversalFamily(f"phi_s_{primes.primes}", 1,
                                  lambda R, G, n: G(0, s_part(n, primes)),
                                  SLocalIntegers(primes), lambda n: n)
        else:
            raise KeyError(f"unknown universal operation {key!r}")
        _families[key] = fam
        return fam


def universal_polynomial(op: str, n: int, param=None) -> RingElement:
    """Component ``n`` of the universal polynomial for ``op`` (with ``param`` for
    ``frobenius`` / ``phi_s``)."""
    key = (op,) if param is None else (op, param.primes if isinstance(param, PrimeSet) else param)
    return family(key).polynomial(n)
