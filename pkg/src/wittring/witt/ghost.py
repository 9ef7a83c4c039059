"""The ghost map and the operators acting on ghost sequences.

On ghost sequences ``(g_n)``: ``F_k`` reads index ``nk``, ``V_k`` inserts ``k * g_{n/k}``
at multiples of ``k``, ``T_l`` copies ``g_{n/l}`` to multiples of ``l`` and
``phi_S`` reads index ``n_S``.
"""

from __future__ import annotations

from ..errors import NotApplicable
from ..rings.base import Ring
from ..trunc import PrimeSet, TruncationSet, divisors, is_prime, moebius, s_part
from .vectors import GhostVector, WittVector


def ghost_payloads(ring: Ring, truncation: TruncationSet, comps: dict) -> dict:
    """``g_n = sum_{d | n} d * a_d^(n/d)`` on payloads."""
    out = {}
    for n in truncation:
        g = ring.zero()
        for d in divisors(n):
            term = ring.pow(comps[d], n // d)
            if d != 1:
                term = ring.mul(ring.from_int(d), term)
            g = ring.add(g, term)
        out[n] = g
    return out


def ghost(w: WittVector) -> GhostVector:
    g = ghost_payloads(w.ring, w.truncation, w.payloads())
    return GhostVector.from_payloads(w.ring, w.truncation, [g[n] for n in w.truncation])


def components_from_ghost(ring: Ring, truncation: TruncationSet, gh: dict) -> dict:
    """Invert the ghost map by ``a_n = (g_n - sum_{d|n, d<n} d a_d^(n/d)) / n``.

    Raises ``NotDivisible`` when a division fails (``gh`` is not a ghost image).
    """
    comps: dict = {}
    for n in truncation:
        acc = gh[n]
        for d in divisors(n)[:-1]:
            term = ring.pow(comps[d], n // d)
            if d != 1:
                term = ring.mul(ring.from_int(d), term)
            acc = ring.sub(acc, term)
        comps[n] = acc if n == 1 else ring.exact_divide(acc, n)
    return comps


def from_ghost(g: GhostVector) -> WittVector:
    comps = components_from_ghost(g.ring, g.truncation, g.payloads())
    return WittVector.from_payloads(g.ring, g.truncation, [comps[n] for n in g.truncation])


# -- ghost-side operators ----------------------------------------------------

def restrict_ghost(g: GhostVector, sub: TruncationSet) -> GhostVector:
    if not sub.issubset(g.truncation):
        raise ValueError(f"{sub} is not contained in {g.truncation}")
    return GhostVector(g.ring, sub, tuple(g[n] for n in sub))


def frobenius_ghost(k: int, g: GhostVector) -> GhostVector:
    """``(F_k g)_n = g_{nk}`` on ``T/k``."""
    if k < 1:
        raise ValueError("k must be positive")
    out = g.truncation.divided(k)
    return GhostVector(g.ring, out, tuple(g[n * k] for n in out))


def default_verschiebung_target(k: int, truncation: TruncationSet) -> TruncationSet:
    """Smallest ``T`` with ``T/k`` equal to ``truncation``."""
    return TruncationSet.closure(list(truncation) + [k * n for n in truncation])


def _check_target(k: int, source: TruncationSet, target: TruncationSet | None) -> TruncationSet:
    if target is None:
        return default_verschiebung_target(k, source)
    if target.divided(k) != source:
        raise ValueError(f"target {target} divided by {k} is {target.divided(k)}, not {source}")
    return target


def verschiebung_ghost(k: int, g: GhostVector, target: TruncationSet | None = None) -> GhostVector:
    """``(V_k g)_n = k * g_{n/k}`` if ``k | n``, else 0."""
    if k < 1:
        raise ValueError("k must be positive")
    target = _check_target(k, g.truncation, target)
    R = g.ring
    zero = R.zero_element()
    return GhostVector(R, target, tuple(g[n // k] * k if n % k == 0 else zero for n in target))


def _check_l(l: int, primes: PrimeSet):
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    if l in primes:
        raise NotApplicable(f"l in S: {l} belongs to P={list(primes.primes)}")


def t_l(l: int, g: GhostVector, primes: PrimeSet, method: str = "componentwise") -> GhostVector:
    """``T_l = 1 + l^{-1} V_l (1 - F_l)`` for a prime ``l`` outside ``primes``.

    ``method="componentwise"`` copies ``g_{n/l}`` to multiples of ``l``;
    ``method="operator"`` composes ``F_l``, ``V_l`` and the scalar ``l^{-1}``.
    """
    _check_l(l, primes)
    T = g.truncation
    if method == "componentwise":
        return GhostVector(g.ring, T, tuple(g[n // l] if n % l == 0 else g[n] for n in T))
    if method == "operator":
        inner = restrict_ghost(g, T.divided(l)) - frobenius_ghost(l, g)
        linv = g.ring.invert_integer(l)
        shifted = verschiebung_ghost(l, inner, T)
        return g + GhostVector(g.ring, T, tuple(e * g.ring.wrap(linv) for e in shifted.entries))
    raise ValueError(f"unknown method {method!r}")


def stationary_m(primes: PrimeSet, bound: int) -> dict[int, int]:
    """Exponents ``{l: e}`` of an ``m`` prime to S at which ``T_m`` is stationary on ``{1..bound}``.

    Each ``l^e`` exceeds ``bound``, so every prime-to-S divisor of an index is
    cleared.
    """
    out = {}
    for l in range(2, bound + 1):
        if is_prime(l) and l not in primes:
            e = 1
            while l**e <= bound:
                e += 1
            out[l] = e
    return out


def t_m(m_exponents: dict[int, int], g: GhostVector, primes: PrimeSet) -> GhostVector:
    """``T_m = prod_l T_l^{ord_l m}``."""
    for l, e in sorted(m_exponents.items()):
        for _ in range(e):
            g = t_l(l, g, primes, method="operator")
    return g


def phi_s_ghost(g: GhostVector, primes: PrimeSet, method: str = "componentwise") -> GhostVector:
    """``phi_S`` on ghost sequences: ``(phi_S g)_n = g_{n_S}``.

    ``method`` selects among the three equivalent expressions: the direct
    ``componentwise`` formula, the stationary ``limit`` of ``T_m`` and the
    ``double_sum`` ``(sum n^-1 V_n)(sum mu(n) n^-1 V_n F_n)`` over ``n`` prime to S.
    """
    T = g.truncation
    if method == "componentwise":
        return GhostVector(g.ring, T, tuple(g[s_part(n, primes)] for n in T))
    if method == "limit":
        return t_m(stationary_m(primes, T.bound), g, primes)
    if method == "double_sum":
        R = g.ring

        def times(v: GhostVector, c) -> GhostVector:
            return GhostVector(R, T, tuple(e * c for e in v.entries))

        # n > bound contributes nothing: F_n lands on the empty truncation
        coprime = [n for n in range(1, T.bound + 1) if primes.is_coprime(n)]
        zero = GhostVector(R, T, tuple(R.zero_element() for _ in T))
        h = zero
        for n in coprime:
            mu = moebius(n)
            if mu:
                vf = verschiebung_ghost(n, frobenius_ghost(n, g), T)
                h = h + times(vf, R.wrap(R.invert_integer(n)) * mu)
        out = zero
        for n in coprime:
            v = verschiebung_ghost(n, restrict_ghost(h, T.divided(n)), T)
            out = out + times(v, R.wrap(R.invert_integer(n)))
        return out
    raise ValueError(f"unknown method {method!r}")
