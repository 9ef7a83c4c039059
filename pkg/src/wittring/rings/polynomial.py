"""Sparse multivariate polynomial rings.

Payload: tuple of ``(exponents, coefficient)`` pairs sorted in ascending
graded-lexicographic order of the exponent tuples, zero coefficients dropped.
"""

from __future__ import annotations

from operator import add as _add

from ..errors import NotDivisible
from .base import Ring, RingElement
from .render import render_combination


def _grlex(e: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(e), e)


class PolynomialRing(Ring):
    def __init__(self, coeffs: Ring, variables):
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",") if v.strip()]
        self.coeffs = coeffs
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable names in {self.variables}")
        self.nvars = len(self.variables)
        self.torsion_free = coeffs.torsion_free
        self.contains_q = coeffs.contains_q
        self._zero_exp = (0,) * self.nvars

    def _key(self):
        return (self.coeffs, self.variables)

    def spec(self) -> str:
        return f"{self.coeffs.spec()}[{','.join(self.variables)}]"

    # -- canonical form ------------------------------------------------------
    def _canon(self, acc: dict) -> tuple:
        iz = self.coeffs.is_zero
        return tuple(sorted(((e, c) for e, c in acc.items() if not iz(c)),
                            key=lambda t: _grlex(t[0])))

    def from_dict(self, terms: dict) -> tuple:
        """Payload from ``{exponents: coefficient_payload}``."""
        return self._canon(dict(terms))

    def zero(self):
        return ()

    def one(self):
        c = self.coeffs.one()
        return () if self.coeffs.is_zero(c) else ((self._zero_exp, c),)

    def is_zero(self, a) -> bool:
        return not a

    def constant(self, c) -> tuple:
        return () if self.coeffs.is_zero(c) else ((self._zero_exp, c),)

    def from_rational(self, q):
        return self.constant(self.coeffs.from_rational(q))

    def from_int(self, n: int):
        return self.constant(self.coeffs.from_int(n))

    def variable(self, name_or_index) -> tuple:
        i = name_or_index if isinstance(name_or_index, int) else self.variables.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return self.constant_times(tuple(e), self.coeffs.one())

    def constant_times(self, e, c) -> tuple:
        return () if self.coeffs.is_zero(c) else ((tuple(e), c),)

    def generators(self) -> dict[str, RingElement]:
        gens = {name: RingElement(self, self.variable(i)) for i, name in enumerate(self.variables)}
        for name, g in self.coeffs.generators().items():
            gens.setdefault(name, RingElement(self, self.constant(g.value)))
        return gens

    # -- arithmetic -----------------------------------------------------------
    def add(self, a, b):
        if not a:
            return b
        if not b:
            return a
        acc = dict(a)
        C = self.coeffs
        if C.native:
            for e, c in b:
                acc[e] = acc[e] + c if e in acc else c
        else:
            for e, c in b:
                acc[e] = C.add(acc[e], c) if e in acc else c
        return self._canon(acc)

    def neg(self, a):
        C = self.coeffs
        return tuple((e, C.neg(c)) for e, c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        acc: dict = {}
        C = self.coeffs
        if C.native:
            for ea, ca in a:
                for eb, cb in b:
                    e = tuple(map(_add, ea, eb))
                    v = ca * cb
                    acc[e] = acc[e] + v if e in acc else v
        else:
            cadd, cmul = C.add, C.mul
            for ea, ca in a:
                for eb, cb in b:
                    e = tuple(map(_add, ea, eb))
                    v = cmul(ca, cb)
                    acc[e] = cadd(acc[e], v) if e in acc else v
        return self._canon(acc)

    def scale(self, a, q):
        C = self.coeffs
        s = C.from_rational(q)
        return self._canon({e: C.mul(c, s) for e, c in a})

    def exact_divide(self, a, n: int):
        C = self.coeffs
        out = []
        for e, c in a:
            try:
                out.append((e, C.exact_divide(c, n)))
            except NotDivisible:
                raise NotDivisible(
                    f"not divisible: coefficient of {self._monomial(e) or '1'} in "
                    f"{self.render(a)} by {n} in {self.spec()}") from None
        return tuple(out)

    def has_torsion(self, n: int) -> bool:
        return self.coeffs.has_torsion(n)

    def is_zs_algebra(self, primes) -> bool:
        return self.coeffs.is_zs_algebra(primes)

    def tensor_q(self) -> "PolynomialRing":
        return PolynomialRing(self.coeffs.tensor_q(), self.variables)

    # -- structure ------------------------------------------------------------
    def coefficient(self, a, exps) -> object:
        for e, c in a:
            if e == tuple(exps):
                return c
        return self.coeffs.zero()

    def degree(self, a) -> int:
        return max((sum(e) for e, _ in a), default=-1)

    def substitute(self, a, target: Ring, values, coeff_map=None):
        """Evaluate payload ``a`` at target payloads ``values`` (one per variable).

        Coefficients are sent through ``coeff_map`` (default: the structure map
        ``target.from_rational``).
        """
        if coeff_map is None:
            coeff_map = target.from_rational
        powers: dict[tuple[int, int], object] = {}
        total = target.zero()
        tmul = target.mul
        for e, c in a:
            term = coeff_map(c)
            for i, k in enumerate(e):
                if k:
                    p = powers.get((i, k))
                    if p is None:
                        p = target.pow(values[i], k)
                        powers[(i, k)] = p
                    term = tmul(term, p)
            total = target.add(total, term)
        return total

    # -- text ---------------------------------------------------------------
    def _monomial(self, e) -> str:
        parts = []
        for name, k in zip(self.variables, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def render(self, a) -> str:
        items = [(self._monomial(e), c) for e, c in reversed(a)]
        return render_combination(items, self.coeffs)

    def sort_key(self, a):
        return tuple((_grlex(e), self.coeffs.sort_key(c)) for e, c in a)

    def coefficient_payloads(self, a):
        return [c for _, c in a]
