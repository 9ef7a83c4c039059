"""Witt vectors as Lambda-series ``prod (1 - a_n t^n)`` and the associated series arithmetic.

Truncated power series are handled as payload lists ``[c_0, ..., c_{N-1}]``
modulo ``t^N``.
"""

from __future__ import annotations

from ..errors import DescriptorMismatch
from ..rings.base import Ring
from ..trunc import TruncationSet
from .vectors import GhostVector, LambdaSeries, WittVector


def series_mul(ring: Ring, a: list, b: list, N: int) -> list:
    """Product of two payload series modulo ``t^N``."""
    out = [ring.zero()] * N
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    for i, x in enumerate(a[:N]):
        if is_zero(x):
            continue
        for j in range(min(len(b), N - i)):
            y = b[j]
            if not is_zero(y):
                out[i + j] = add(out[i + j], mul(x, y))
    return out


def series_one(ring: Ring, N: int) -> list:
    return [ring.one()] + [ring.zero()] * (N - 1)


def _one_minus(ring: Ring, a, n: int, N: int) -> list:
    """``1 - a t^n`` modulo ``t^N``."""
    s = series_one(ring, N)
    if n < N:
        s[n] = ring.neg(a)
    return s


def _geometric(ring: Ring, a, n: int, N: int) -> list:
    """``1 / (1 - a t^n) = sum_k a^k t^{kn}`` modulo ``t^N``."""
    s = [ring.zero()] * N
    p = ring.one()
    for k in range(0, N, n):
        s[k] = p
        p = ring.mul(p, a)
    return s


def _check_full(w: WittVector) -> int:
    if not w.truncation.is_full():
        raise DescriptorMismatch(f"Lambda-series need the full truncation {{1..N-1}}, got {w.truncation}")
    return w.truncation.bound + 1


def witt_to_lambda(w: WittVector) -> LambdaSeries:
    """``(a_1, ..., a_{N-1}) -> prod_n (1 - a_n t^n)`` modulo ``t^N``."""
    N = _check_full(w)
    R = w.ring
    s = series_one(R, N)
    for n, a in zip(w.truncation, w.components):
        if not a.is_zero():
            s = series_mul(R, s, _one_minus(R, a.value, n, N), N)
    return LambdaSeries.from_series(R, s)


def lambda_to_witt(s: LambdaSeries) -> WittVector:
    """Inverse of :func:`witt_to_lambda`, peeling one factor per degree."""
    R, N = s.ring, s.precision
    rest = s.series()
    comps = []
    for n in range(1, N):
        a = R.neg(rest[n])
        comps.append(a)
        if not R.is_zero(a):
            rest = series_mul(R, rest, _geometric(R, a, n, N), N)
    return WittVector.from_payloads(R, TruncationSet.full(N), comps)


def _same(s: LambdaSeries, u: LambdaSeries) -> None:
    if s.ring != u.ring or s.precision != u.precision:
        raise DescriptorMismatch("Lambda-series over different rings or precisions")


def lambda_add(s: LambdaSeries, u: LambdaSeries) -> LambdaSeries:
    """Addition in Lambda is the product of power series."""
    _same(s, u)
    return LambdaSeries.from_series(s.ring, series_mul(s.ring, s.series(), u.series(), s.precision))


def lambda_mul(s: LambdaSeries, u: LambdaSeries, backend: str | None = None) -> LambdaSeries:
    """Multiplication in Lambda, transported from Witt multiplication."""
    from .ops import witt_mul

    _same(s, u)
    return witt_to_lambda(witt_mul(lambda_to_witt(s), lambda_to_witt(u), backend))


def log_derivative_payloads(ring: Ring, s: list, N: int) -> list:
    """Coefficients ``g_1..g_{N-1}`` of ``-t s'(t) / s(t)`` for ``s(0) = 1``.

    Solved from ``s * g = -t s'`` degree by degree, so no division is needed.
    """
    g = [ring.zero()] * N
    for n in range(1, N):
        acc = ring.neg(ring.mul(ring.from_int(n), s[n]))
        for i in range(1, n):
            if not ring.is_zero(s[i]):
                acc = ring.sub(acc, ring.mul(s[i], g[n - i]))
        g[n] = acc
    return g[1:]


def lambda_log_derivative(s: LambdaSeries) -> GhostVector:
    """Ghost vector of ``-t d/dt log s``; equals ``ghost(lambda_to_witt(s))``."""
    R, N = s.ring, s.precision
    return GhostVector.from_payloads(R, TruncationSet.full(N), log_derivative_payloads(R, s.series(), N))
