"""Lambda-ring structure induced by commuting Frobenius lifts.

An :class:`AdamsContext` fixes a torsion-free ``Z_S``-algebra ``B`` and
endomorphisms ``psi^p`` (``p`` in ``P``) with ``psi^p(b) = b^p mod pB``.  They
determine the Adams operations ``psi^n = psi^{n_S}`` and the exponents
``tau_k``.  ``lambda^n`` is computed by two independent routes: the Newton
recursion and the sum over S-partitions of binomials in the ``tau_k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import DualPathMismatch, NotApplicable, NotDivisible
from .rings.base import Ring, RingElement
from .rings.extension import binomial, embed, integrality_check, rational_extension
from .rings.monoid import MonoidAlgebra
from .rings.polynomial import PolynomialRing
from .rings.scalars import RationalLike, SLocalIntegers
from .trunc import PrimeSet, TruncationSet, divisors, factorize, is_prime, moebius, s_part, \
    s_partitions, s_truncation
from .witt.ghost import components_from_ghost
from .witt.ops import phi_bar, teichmuller
from .witt.series import log_derivative_payloads, series_mul, series_one, witt_to_lambda
from .witt.vectors import GhostVector, LambdaSeries, WittVector


class AdamsContext:
    """Commuting Frobenius lifts on a torsion-free ``Z_S``-algebra.

    ``B`` may be a polynomial ring over ``Z_S``, a monoid algebra ``Z_S{M}``
    (where ``psi^p[r] = [r^p]``), or a polynomial ring over such a monoid
    algebra.  ``lifts[p]`` maps variable names to their images under
    ``psi^p``; a variable left out is sent to its ``p``-th power.

    Construction checks that the lifts commute on generators and satisfy the
    Frobenius congruence on generators and on their pairwise products.
    """

    def __init__(self, base: Ring, primes: PrimeSet, lifts: dict | None = None):
        if not base.torsion_free:
            raise NotApplicable(f"{base.spec()} has Z-torsion")
        if not base.is_zs_algebra(primes):
            raise NotApplicable(f"{base.spec()} is not a Z_S-algebra for P={list(primes.primes)}")
        self.base = base
        self.primes = primes
        self.extension = rational_extension(base)
        lifts = dict(lifts or {})
        for p in lifts:
            if p not in primes:
                raise NotApplicable(f"lift given for {p}, which is not in P={list(primes.primes)}")
        self._poly = base if isinstance(base, PolynomialRing) else None
        if self._poly is not None:
            coeffs = self._poly.coeffs
            self._monoid = coeffs if isinstance(coeffs, MonoidAlgebra) else None
            if self._monoid is None and not isinstance(coeffs, RationalLike):
                raise NotApplicable(f"unsupported coefficient ring {coeffs.spec()}")
        elif isinstance(base, MonoidAlgebra):
            self._monoid = base
            if lifts:
                raise NotApplicable("lifts on a monoid algebra are fixed by [r] -> [r^p]")
        else:
            raise NotApplicable(f"no Frobenius lifts on {base.spec()}")
        self._images: dict[int, tuple] = {1: self._identity_images()}
        for p in primes:
            self._images[p] = self._prime_images(p, lifts.get(p, {}))
        self._check()

    # -- generator images -----------------------------------------------------
    def _identity_images(self) -> tuple:
        if self._poly is None:
            return ()
        return tuple(self._poly.variable(i) for i in range(self._poly.nvars))

    def _prime_images(self, p: int, given: dict) -> tuple:
        if self._poly is None:
            return ()
        B = self._poly
        unknown = set(given) - set(B.variables)
        if unknown:
            raise NotApplicable(f"lift for {p} names unknown generators {sorted(unknown)}")
        out = []
        for i, v in enumerate(B.variables):
            if v in given:
                img = given[v]
                img = B.parse(img) if isinstance(img, str) else B(img)
                out.append(img.value)
            else:
                out.append(B.pow(B.variable(i), p))
        return tuple(out)

    def _apply_images(self, m: int, images: tuple, a):
        B = self.base
        if self._poly is None:
            return self._monoid_power(m, a)
        if self._monoid is None:
            return B.substitute(a, B, images, coeff_map=B.constant)
        return B.substitute(a, B, images,
                            coeff_map=lambda c: B.constant(self._monoid_power(m, c)))

    def _monoid_power(self, m: int, a):
        M = self._monoid
        if m == 1:
            return a
        return M.from_dict(_accumulate(M, ((M.monoid.pow(r, m), c) for r, c in a)))

    def images(self, m: int) -> tuple:
        """Images of the polynomial variables under ``psi^m`` (``m`` S-smooth)."""
        got = self._images.get(m)
        if got is None:
            p = factorize(m)[0][0]
            inner = self.images(m // p)
            got = tuple(self._apply_images(p, self._images[p], g) for g in inner)
            self._images[m] = got
        return got

    def generators(self) -> list[RingElement]:
        """Ring generators on which the lifts are checked."""
        B = self.base
        gens = []
        if self._poly is not None:
            gens += [RingElement(B, B.variable(i)) for i in range(B.nvars)]
        if self._monoid is not None:
            M = self._monoid
            if M.monoid.is_finite:
                rs = M.monoid.elements()
            else:
                rs = [M.monoid.parse(s) for s in ("-2", "-1", "0", "1", "2", "3")]
            for r in rs:
                b = M.basis(r)
                gens.append(RingElement(B, B.constant(b) if self._poly is not None else b))
        return gens

    def _check(self) -> None:
        gens = self.generators()
        for p in self.primes:
            for q in self.primes:
                if p < q:
                    for g in gens:
                        if self.adams(p * q, g, checked=False) != self._compose(q, p, g):
                            raise NotApplicable(f"lifts for {p} and {q} do not commute on {g}")
        samples = gens + [a * b for i, a in enumerate(gens) for b in gens[i:]]
        for p in self.primes:
            for b in samples:
                diff = self.psi_prime(p, b) - b**p
                try:
                    diff.exact_divide(p)
                except NotDivisible:
                    raise NotApplicable(
                        f"psi^{p}({b}) is not congruent to ({b})^{p} mod {p}") from None

    def _compose(self, outer: int, inner: int, x: RingElement) -> RingElement:
        return self.psi_prime(outer, self.psi_prime(inner, x))

    def psi_prime(self, p: int, x: RingElement) -> RingElement:
        return RingElement(self.base, self._apply_images(p, self._images[p], x.value))

    # -- Adams operations -----------------------------------------------------
    def coerce(self, x) -> RingElement:
        if isinstance(x, RingElement):
            return self.base(x)
        if isinstance(x, str):
            return self.base.parse(x)
        return self.base(x)

    def adams(self, n: int, x, checked: bool = True) -> RingElement:
        """``psi^n(x) = prod_p (psi^p)^{ord_p n} x``, which depends only on ``n_S``."""
        if n < 1:
            raise ValueError("n must be positive")
        x = self.coerce(x) if checked else x
        m = s_part(n, self.primes)
        if m == 1:
            return x
        return RingElement(self.base, self._apply_images(m, self.images(m), x.value))

    def tau(self, k: int, x) -> RingElement:
        """``tau_k(x) = k^{-1} sum_{d | k} mu(d) psi^{k/d}(x)`` in ``B (x) Q``.

        For ``k`` outside S the sum vanishes.
        """
        x = self.coerce(x)
        A = self.extension
        acc = A.zero_element()
        for d in divisors(k):
            mu = moebius(d)
            if mu:
                acc = acc + embed(self.adams(k // d, x), A) * mu
        return acc.scale(mpq(1, k))

    def lambda_powers(self, n: int, x) -> list[RingElement]:
        """``[lambda^0(x), ..., lambda^n(x)]`` from the Newton recursion.

        ``i lambda^i = sum_{j=1}^{i} (-1)^{j-1} lambda^{i-j} psi^j``; each
        division by ``i`` must be exact.
        """
        x = self.coerce(x)
        B = self.base
        psis = [None] + [self.adams(i, x) for i in range(1, n + 1)]
        lam = [B.one_element()]
        for i in range(1, n + 1):
            acc = B.zero_element()
            for j in range(1, i + 1):
                term = lam[i - j] * psis[j]
                acc = acc + term if j % 2 else acc - term
            try:
                lam.append(acc.exact_divide(i))
            except NotDivisible as e:
                raise NotDivisible(f"lambda^{i}({x}): {e}") from None
        return lam

    def lambda_wilkerson(self, n: int, x) -> RingElement:
        return self.lambda_powers(n, x)[n]

    def lambda_explicit(self, n: int, x) -> RingElement:
        """``(-1)^n lambda^n(x) = sum_{||nu|| = n} (-1)^{|nu|} prod_k C(tau_k(x), nu_k)``.

        The sum is formed in ``B (x) Q`` and retracted to ``B``.
        """
        if n < 1:
            raise ValueError("n must be positive")
        x = self.coerce(x)
        A = self.extension
        taus: dict[int, RingElement] = {}
        binoms: dict[tuple[int, int], RingElement] = {}
        total = A.zero_element()
        for nu in s_partitions(n, self.primes):
            term = A.one_element()
            for k, v in nu.entries:
                if k not in taus:
                    taus[k] = self.tau(k, x)
                if (k, v) not in binoms:
                    binoms[(k, v)] = binomial(taus[k], v)
                term = term * binoms[(k, v)]
            total = total - term if nu.size % 2 else total + term
        if n % 2:
            total = -total
        return integrality_check(total, self.base)

    # -- series ---------------------------------------------------------------
    def lambda_series(self, x, N: int, check: bool = True) -> LambdaSeries:
        """``lambda_S(x) = sum (-1)^i lambda^i(x) t^i`` modulo ``t^N``.

        With ``check`` the product ``prod_{k in S} (1 - t^k)^{tau_k(x)}`` is
        expanded independently and must agree coefficientwise.
        """
        x = self.coerce(x)
        lam = self.lambda_powers(N - 1, x)
        coeffs = [c if i % 2 == 0 else -c for i, c in enumerate(lam)]
        if check:
            product = self.lambda_product(x, N)
            for i, (a, b) in enumerate(zip(coeffs, product)):
                if a != b:
                    raise DualPathMismatch(
                        f"coefficient of t^{i} in lambda_S({x}): Newton gives {a}, product gives {b}")
        return LambdaSeries(self.base, N, tuple(coeffs[1:]))

    def lambda_product(self, x, N: int) -> list[RingElement]:
        """Coefficients of ``prod_{k in S_N} (1 - t^k)^{tau_k(x)}`` retracted to ``B``."""
        x = self.coerce(x)
        A = self.extension
        s = series_one(A, N)
        for k in s_truncation(self.primes, N):
            s = series_mul(A, s, binomial_series(self.tau(k, x), k, N, sign=-1), N)
        return [integrality_check(RingElement(A, c), self.base) for c in s]

    def psi_series(self, x, N: int, check: bool = True) -> GhostVector:
        """Ghost vector ``(psi^n(x))_{n < N}``.

        With ``check`` the resummation ``psi^n = sum_{k | n, k in S} k tau_k`` is
        recomputed in ``B (x) Q`` and must agree.
        """
        x = self.coerce(x)
        T = TruncationSet.full(N)
        entries = tuple(self.adams(n, x) for n in T)
        if check:
            for n, e in zip(T, psi_mobius(self, x, N)):
                if embed(entries[n - 1], self.extension) != e:
                    raise DualPathMismatch(f"psi^{n}({x}) differs from its tau resummation {e}")
        return GhostVector(self.base, T, entries)

    def alpha_tilde(self, x, N: int) -> WittVector:
        """The Witt vector over ``S_N`` with ghost entries ``psi^n(x)``."""
        x = self.coerce(x)
        T = s_truncation(self.primes, N)
        B = self.base
        comps = components_from_ghost(B, T, {n: self.adams(n, x).value for n in T})
        return WittVector.from_payloads(B, T, [comps[n] for n in T])


class MonoidAdamsContext(AdamsContext):
    """The canonical lifts on ``Z_S R``: ``psi^n[r] = [r^{n_S}]``."""

    def __init__(self, base: MonoidAlgebra):
        if not isinstance(base, MonoidAlgebra):
            raise NotApplicable(f"{base.spec()} is not a monoid algebra")
        super().__init__(base, base.primes)


def _accumulate(M: MonoidAlgebra, pairs) -> dict:
    acc: dict = {}
    for r, c in pairs:
        acc[r] = acc[r] + c if r in acc else c
    return acc


def binomial_series(c: RingElement, k: int, N: int, sign: int = -1) -> list:
    """Payloads of ``(1 + sign t^k)^c = sum_i C(c, i) (sign t^k)^i`` modulo ``t^N``."""
    A = c.ring
    s = [A.zero()] * N
    s[0] = A.one()
    b = A.one_element()
    for i in range(1, (N - 1) // k + 1):
        b = (b * (c - (i - 1))).scale(mpq(1, i))
        s[i * k] = b.value if sign > 0 or i % 2 == 0 else (-b).value
    return s


def psi_mobius(ctx: AdamsContext, x, N: int) -> list[RingElement]:
    """``sum_{k | n, k in S} k tau_k(x)`` for ``n < N``, in ``B (x) Q``."""
    x = ctx.coerce(x)
    A = ctx.extension
    taus = {k: ctx.tau(k, x) for k in s_truncation(ctx.primes, N)}
    out = []
    for n in range(1, N):
        acc = A.zero_element()
        for k in divisors(n):
            if k in taus:
                acc = acc + taus[k] * k
        out.append(acc)
    return out


# -- module-level entry points ------------------------------------------------

def adams(n: int, x, ctx: AdamsContext) -> RingElement:
    return ctx.adams(n, x)


def tau(k: int, x, ctx: AdamsContext) -> RingElement:
    return ctx.tau(k, x)


def lambda_wilkerson(n: int, x, ctx: AdamsContext) -> RingElement:
    return ctx.lambda_wilkerson(n, x)


def lambda_explicit(n: int, x, ctx: AdamsContext) -> RingElement:
    return ctx.lambda_explicit(n, x)


def lambda_series(x, N: int, ctx: AdamsContext, check: bool = True) -> LambdaSeries:
    return ctx.lambda_series(x, N, check)


def psi_series(x, N: int, ctx: AdamsContext, check: bool = True) -> GhostVector:
    return ctx.psi_series(x, N, check)


def alpha_tilde(x, N: int, ctx: AdamsContext) -> WittVector:
    return ctx.alpha_tilde(x, N)


def log_psi_series(s: LambdaSeries) -> list[RingElement]:
    """Coefficients of ``-t d/dt log s``, the power-sum series of a Lambda-series."""
    return [RingElement(s.ring, g) for g in log_derivative_payloads(s.ring, s.series(), s.precision)]


@dataclass(frozen=True)
class DworkResult:
    """``lambda_S(X)`` and ``F(X, t)``, both over ``Z_S[X]`` with ``S`` the powers of ``p``."""

    prime: int
    precision: int
    lambda_series: LambdaSeries
    F: LambdaSeries
    witt_checked_to: int


def dwork_series(p: int, N: int) -> list[RingElement]:
    """``(1+t)^X prod_{i>=1} (1 + t^{p^i})^{p^{-i}(X^{p^i} - X^{p^{i-1}})}`` modulo ``t^N`` over ``Q[X]``."""
    A = PolynomialRing(SLocalIntegers().tensor_q(), ["X"])
    X = A.generators()["X"]
    s = binomial_series(X, 1, N, sign=1)
    q = p
    while q < N:
        c = (X**q - X**(q // p)).scale(mpq(1, q))
        s = series_mul(A, s, binomial_series(c, q, N, sign=1), N)
        q *= p
    return [RingElement(A, c) for c in s]


def dwork_product(p: int, N: int, witt_precision: int | None = 20) -> DworkResult:
    """Dwork's series for an odd prime ``p`` modulo ``t^N``, with its three identities checked.

    The product above is expanded over ``Q[X]`` and retracted to ``Z_(p)[X]``
    (p-integrality); ``F(X, -t)`` must equal ``lambda_S(X)`` for
    ``psi^p(X) = X^p``; and ``lambda_S(X)`` must equal the Lambda-series of
    ``phi_bar(<X>)`` up to ``t^witt_precision`` (skipped when ``None``).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise NotApplicable("the Dwork identity F(X,-t) = lambda_S(X) needs an odd prime")
    P = PrimeSet([p])
    B = PolynomialRing(SLocalIntegers(P), ["X"])
    ctx = AdamsContext(B, P)
    X = B.generators()["X"]
    lam = ctx.lambda_series(X, N)
    F = [integrality_check(c, B) for c in dwork_series(p, N)]
    F_series = LambdaSeries(B, N, tuple(F[1:]))
    negated = F_series.substitute_negated()
    for i in range(1, N):
        if negated[i] != lam[i]:
            raise DualPathMismatch(f"F(X,-t) and lambda_S(X) differ at t^{i}")
    checked = 0
    if witt_precision:
        M = min(witt_precision, N)
        w = phi_bar(teichmuller(X, s_truncation(P, M)), P, M)
        via_witt = witt_to_lambda(w)
        for i in range(1, M):
            if via_witt[i] != lam[i]:
                raise DualPathMismatch(f"phi_bar(<X>) and lambda_S(X) differ at t^{i}")
        checked = M
    return DworkResult(p, N, lam, F_series, checked)


__all__ = [
    "AdamsContext", "MonoidAdamsContext", "DworkResult", "adams", "tau", "lambda_wilkerson",
    "lambda_explicit", "lambda_series", "psi_series", "psi_mobius", "alpha_tilde",
    "binomial_series", "dwork_series", "dwork_product", "log_psi_series",
]
