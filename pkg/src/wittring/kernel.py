"""The map ``alpha_{S_N}: B -> W_{S_N}(R)`` and tests for membership in its kernel.

Three independent tests are provided:

* ``in_kernel_lambda``: ``pi(lambda^n(x)) = 0`` for ``1 <= n < N``;
* ``in_kernel_ghost``: ``sum_r n_r r^nu = 0`` for ``nu`` in ``S_N`` (``B = Z_S R``,
  ``R`` without ``S_N``-torsion);
* ``in_kernel_direct``: evaluate ``alpha(x)`` by Witt arithmetic over ``R``.

For ``R = F_p`` the kernel is also a power of the augmentation ideal, which
``ideal_power_membership`` tests by linear algebra over ``Z_S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import gcd

from gmpy2 import mpq

from .errors import NotApplicable
from .lambda_ring import AdamsContext, MonoidAdamsContext
from .rings.base import Ring, RingElement
from .rings.monoid import MonoidAlgebra, RingMonoid, augmentation
from .rings.polynomial import PolynomialRing
from .rings.scalars import Residue
from .trunc import PrimeSet, is_prime, s_part, s_truncation
from .witt.ops import teichmuller, witt_add, witt_mul, witt_scalar, witt_zero
from .witt.vectors import WittVector


@dataclass(frozen=True)
class KernelResult:
    """Outcome of a kernel test; ``witness`` is the first failing ``(index, value)``."""

    member: bool
    witness: tuple[int, RingElement] | None = None
    method: str = ""

    def __str__(self) -> str:
        if self.member:
            return "member: true"
        if self.witness is None:
            return "member: false"
        n, value = self.witness
        return f"member: false, witness: n={n}, value={value}"


class KernelProblem:
    """``B`` with its Adams context, a ring map ``pi: B -> R`` and the bound ``N``.

    ``pi_images`` sends polynomial variables of ``B`` to elements of ``R``;
    symbols ``[r]`` of a monoid algebra go to ``r`` (the augmentation), so the
    monoid must be realizable in ``R``.
    """

    def __init__(self, ctx: AdamsContext, target: Ring, N: int, pi_images: dict | None = None):
        if N < 1:
            raise ValueError("N must be positive")
        P = ctx.primes
        if not target.is_zs_algebra(P):
            raise NotApplicable(f"{target.spec()} is not a Z_S-algebra for P={list(P.primes)}")
        self.ctx = ctx
        self.base = ctx.base
        self.target = target
        self.N = N
        self.primes = P
        self.truncation = s_truncation(P, N)
        B = self.base
        pi_images = dict(pi_images or {})
        if isinstance(B, PolynomialRing):
            unknown = set(pi_images) - set(B.variables)
            if unknown:
                raise NotApplicable(f"pi names unknown generators {sorted(unknown)}")
            missing = [v for v in B.variables if v not in pi_images]
            if missing:
                raise NotApplicable(f"pi is not given on {missing}")
            self._images = tuple(_coerce(target, pi_images[v]).value for v in B.variables)
            self._monoid = B.coeffs if isinstance(B.coeffs, MonoidAlgebra) else None
        elif isinstance(B, MonoidAlgebra):
            if pi_images:
                raise NotApplicable("pi on a monoid algebra is the augmentation")
            self._images = ()
            self._monoid = B
        else:
            raise NotApplicable(f"no ring map from {B.spec()}")
        if self._monoid is not None:
            self._check_monoid()

    @classmethod
    def monoid(cls, target: Ring, primes: PrimeSet, N: int) -> "KernelProblem":
        """``B = Z_S R`` with ``psi^n[r] = [r^{n_S}]`` and ``pi`` the augmentation."""
        B = MonoidAlgebra(primes, RingMonoid(target))
        return cls(MonoidAdamsContext(B), target, N)

    def _check_monoid(self) -> None:
        M = self._monoid.monoid
        R = self.target
        if M.realize(M.unit, R) != R.one():
            raise NotApplicable("pi does not send [1] to 1")
        if M.is_finite:
            els = M.elements()
            for a in els:
                for b in els:
                    if M.realize(M.mul(a, b), R) != R.mul(M.realize(a, R), M.realize(b, R)):
                        raise NotApplicable(f"pi is not multiplicative on [{M.render(a)}][{M.render(b)}]")

    @property
    def is_augmentation(self) -> bool:
        return isinstance(self.base, MonoidAlgebra)

    def pi(self, x: RingElement) -> RingElement:
        B, R = self.base, self.target
        x = B(x)
        if isinstance(B, MonoidAlgebra):
            return augmentation(x, R)
        if self._monoid is None:
            return RingElement(R, B.substitute(x.value, R, self._images))
        M = self._monoid
        return RingElement(R, B.substitute(
            x.value, R, self._images, coeff_map=lambda c: augmentation(RingElement(M, c), R).value))

    def pi_witt(self, w: WittVector) -> WittVector:
        """``W(pi)``: apply ``pi`` componentwise."""
        return WittVector(self.target, w.truncation, tuple(self.pi(c) for c in w.components))


def _coerce(ring: Ring, value) -> RingElement:
    return ring.parse(value) if isinstance(value, str) else ring(value)


# -- alpha ----------------------------------------------------------------------

def alpha(x, prob: KernelProblem, method: str = "auto") -> WittVector:
    """``alpha_{S_N}(x)`` in ``W_{S_N}(R)``.

    ``method="lift"`` applies ``W(pi)`` to the Witt vector with ghost entries
    ``psi^n(x)``; ``method="teichmuller"`` (monoid algebras only) forms
    ``sum_r n_r <r>`` by Witt arithmetic over ``R``.  ``"auto"`` prefers the
    latter.
    """
    x = prob.ctx.coerce(x)
    if method == "auto":
        method = "teichmuller" if prob.is_augmentation else "lift"
    if method == "lift":
        return prob.pi_witt(prob.ctx.alpha_tilde(x, prob.N))
    if method == "teichmuller":
        return _teichmuller_sum(x, prob)
    raise ValueError(f"unknown method {method!r}")


def _teichmuller_sum(x: RingElement, prob: KernelProblem) -> WittVector:
    B = prob.base
    if not isinstance(B, MonoidAlgebra):
        raise NotApplicable("the Teichmueller route needs B = Z_S R")
    R, T = prob.target, prob.truncation
    M = B.monoid
    total = witt_zero(R, T)
    for r, c in x.value:
        term = teichmuller(RingElement(R, M.realize(r, R)), T)
        if c != 1:
            term = witt_mul(witt_scalar(c, R, T), term)
        total = witt_add(total, term)
    return total


# -- kernel tests ---------------------------------------------------------------

def in_kernel_lambda(x, prob: KernelProblem) -> KernelResult:
    """``x`` is in the kernel iff ``pi(lambda^n(x)) = 0`` for ``1 <= n < N``."""
    x = prob.ctx.coerce(x)
    if prob.N <= 1:
        return KernelResult(True, None, "lambda")
    lam = prob.ctx.lambda_powers(prob.N - 1, x)
    for n in range(1, prob.N):
        v = prob.pi(lam[n])
        if not v.is_zero():
            return KernelResult(False, (n, v), "lambda")
    return KernelResult(True, None, "lambda")


def in_kernel_ghost(x, prob: KernelProblem) -> KernelResult:
    """``x = sum n_r [r]`` is in the kernel iff ``sum n_r r^nu = 0`` for ``nu`` in ``S_N``.

    Valid only when ``R`` has no ``nu``-torsion for ``nu`` in ``S_N``.
    """
    B, R = prob.base, prob.target
    if not isinstance(B, MonoidAlgebra):
        raise NotApplicable("the ghost criterion needs B = Z_S R")
    for nu in prob.truncation:
        if R.has_torsion(nu):
            raise NotApplicable(f"criterion inapplicable: {R.spec()} has {nu}-torsion")
    x = B(x)
    M = B.monoid
    for nu in prob.truncation:
        acc = R.zero()
        for r, c in x.value:
            acc = R.add(acc, R.mul(R.from_rational(c), R.pow(M.realize(r, R), nu)))
        if not R.is_zero(acc):
            return KernelResult(False, (nu, RingElement(R, acc)), "ghost")
    return KernelResult(True, None, "ghost")


def in_kernel_direct(x, prob: KernelProblem) -> KernelResult:
    """``alpha(x) = 0``, evaluated by Witt arithmetic; the witness is a nonzero component."""
    w = alpha(x, prob)
    for n, c in zip(w.truncation, w.components):
        if not c.is_zero():
            return KernelResult(False, (n, c), "direct")
    return KernelResult(True, None, "direct")


# -- augmentation ideal powers over F_p -----------------------------------------

def _check_fp(prob: KernelProblem) -> int:
    R = prob.target
    if not (isinstance(R, Residue) and is_prime(R.modulus)) or not prob.is_augmentation:
        raise NotApplicable("ideal powers are implemented for B = Z_S F_p with the augmentation")
    p = R.modulus
    if p not in prob.primes:
        raise NotApplicable(f"{p} must belong to P={list(prob.primes.primes)}")
    return p


def augmentation_ideal_generators(prob: KernelProblem) -> list[RingElement]:
    """``Z_S``-module generators of ``I = ker pi``: ``[r] - r~[1]`` (``r`` an integer lift) and ``p[1]``."""
    p = _check_fp(prob)
    B = prob.base
    one = B.one_element()
    gens = []
    for r in prob.target.elements():
        if r != 1:
            gens.append(B.basis_element(r) - one * int(r))
    gens.append(one * p)
    return gens


def _ideal_power_span(prob: KernelProblem, n: int) -> list[RingElement]:
    gens = augmentation_ideal_generators(prob)
    out = []
    for combo in combinations_with_replacement(range(len(gens)), n):
        v = prob.base.one_element()
        for i in combo:
            v = v * gens[i]
        if not v.is_zero():
            out.append(v)
    return out


def _coordinates(B: MonoidAlgebra, x: RingElement, basis: list) -> list:
    d = dict(x.value)
    return [mpq(d.get(r, 0)) for r in basis]


class _ZSEchelon:
    """Row echelon form over ``Z_S`` of finitely many vectors with ``Z_S`` entries.

    Rows are scaled by units to integers; pivots are combined by extended gcd,
    so row operations stay invertible over ``Z_S``.
    """

    def __init__(self, primes: PrimeSet, rows: list[list]):
        self.primes = primes
        self.pivots: list[tuple[int, list[int]]] = []
        width = len(rows[0]) if rows else 0
        work = [self._integral(r) for r in rows]
        col = 0
        while col < width and work:
            live = [r for r in work if r[col]]
            rest = [r for r in work if not r[col]]
            if not live:
                col += 1
                continue
            pivot = live[0]
            for r in live[1:]:
                pivot, reduced = self._combine(pivot, r, col)
                rest.append(reduced)
            self.pivots.append((col, self._normalize(pivot, col)))
            work = [r for r in rest if any(r)]
            col += 1

    def _integral(self, row: list) -> list[int]:
        den = 1
        for q in row:
            den = den * int(mpq(q).denominator) // gcd(den, int(mpq(q).denominator))
        if s_part(den, self.primes) != 1:
            raise NotApplicable(f"entry with denominator {den} is not in Z_S")
        return [int(mpq(q) * den) for q in row]

    def _normalize(self, row: list[int], col: int) -> list[int]:
        # divide out the unit part of the pivot so that it is P-smooth
        a = abs(row[col])
        unit = a // s_part(a, self.primes)
        sign = -1 if row[col] < 0 else 1
        return [mpq(v, unit * sign) for v in row]

    @staticmethod
    def _combine(a: list[int], b: list[int], col: int) -> tuple[list[int], list[int]]:
        x, y = a[col], b[col]
        g, u, v = _ext_gcd(x, y)
        # [[u, v], [-y/g, x/g]] has determinant 1
        top = [u * s + v * t for s, t in zip(a, b)]
        bot = [(-y // g) * s + (x // g) * t for s, t in zip(a, b)]
        return top, bot

    def contains(self, vec: list) -> bool:
        v = [mpq(q) for q in vec]
        for col, row in self.pivots:
            if not v[col]:
                continue
            q = v[col] / row[col]
            if s_part(int(q.denominator), self.primes) != 1:
                return False
            v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def index(self) -> int | None:
        """``|Z_S^w / span|`` when the span has full rank, else ``None``."""
        return None if not self.pivots else _product(
            s_part(abs(int(row[col])), self.primes) for col, row in self.pivots)


def _product(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _ideal_power_echelon(prob: KernelProblem, n: int) -> tuple[_ZSEchelon, list]:
    basis = list(prob.target.elements())
    rows = [_coordinates(prob.base, v, basis) for v in _ideal_power_span(prob, n)]
    return _ZSEchelon(prob.primes, rows), basis


def ideal_power_membership(x, n: int, prob: KernelProblem) -> KernelResult:
    """Whether ``x`` lies in ``I^n``, ``I`` the augmentation ideal of ``Z_S F_p``."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_fp(prob)
    x = prob.base(x)
    ech, basis = _ideal_power_echelon(prob, n)
    if ech.contains(_coordinates(prob.base, x, basis)):
        return KernelResult(True, None, f"I^{n}")
    return KernelResult(False, None, f"I^{n}")


def ideal_power_quotient_order(prob: KernelProblem, n: int) -> int | None:
    """``|Z_S F_p / I^n|`` (``None`` if infinite), for comparison with ``p^{|S_N|}``."""
    _check_fp(prob)
    ech, basis = _ideal_power_echelon(prob, n)
    if len(ech.pivots) < len(basis):
        return None
    return ech.index()


def ideal_power_bound(p: int, n: int) -> int:
    """The ``N`` with ``S_N = {1, p, ..., p^{n-1}}`` for ``P = {p}``."""
    return p ** (n - 1) + 1


__all__ = [
    "KernelProblem", "KernelResult", "alpha", "in_kernel_lambda", "in_kernel_ghost",
    "in_kernel_direct", "ideal_power_membership", "ideal_power_quotient_order",
    "ideal_power_bound", "augmentation_ideal_generators",
]
