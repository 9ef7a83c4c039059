"""Ring operations and structure maps on truncated big Witt vectors.

Each operation has two interchangeable backends:

``"ghost"``
    act on ghost coordinates and pull back with ``from_ghost``; only valid
    over torsion-free rings.
``"universal"``
    evaluate the memoized universal component polynomials; valid over any
    ring (over any ``Z_S``-algebra for operations with ``Z_S`` coefficients).

``backend=None`` picks ``"ghost"`` for torsion-free rings, else ``"universal"``.
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

from ..errors import DescriptorMismatch, NotApplicable
from ..rings.base import Ring, RingElement
from ..rings.scalars import Rationals
from ..trunc import PrimeSet, TruncationSet, s_part, s_truncation
from .ghost import (_check_target, components_from_ghost, frobenius_ghost, ghost, phi_s_ghost,
                    verschiebung_ghost)
from .universal import family
from .vectors import GhostVector, WittVector


def _backend(ring: Ring, backend: str | None) -> str:
    if backend is None:
        return "ghost" if ring.torsion_free else "universal"
    if backend not in ("ghost", "universal"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "ghost" and not ring.torsion_free:
        raise NotApplicable(f"ghost backend needs a torsion-free ring, not {ring.spec()}")
    return backend


def _same(u: WittVector, v: WittVector) -> None:
    if u.ring != v.ring:
        raise DescriptorMismatch(f"Witt vectors over {u.ring.spec()} and {v.ring.spec()}")
    if u.truncation != v.truncation:
        raise DescriptorMismatch(f"Witt vectors over {u.truncation} and {v.truncation}")


def _evaluate(key: tuple, inputs: list[WittVector], out_t: TruncationSet, ring: Ring) -> WittVector:
    fam = family(key)
    comps = [w.payloads() for w in inputs]
    powers: dict = {}
    return WittVector.from_payloads(ring, out_t, [fam.evaluate(n, ring, comps, powers) for n in out_t])


def _ghost_route(w: WittVector | GhostVector, out_t: TruncationSet, entry) -> WittVector:
    g = ghost(w) if isinstance(w, WittVector) else w
    R = g.ring
    gp = g.payloads()
    new = {n: entry(gp, n) for n in out_t}
    comps = components_from_ghost(R, out_t, new)
    return WittVector.from_payloads(R, out_t, [comps[n] for n in out_t])


def witt_add(u: WittVector, v: WittVector, backend: str | None = None) -> WittVector:
    _same(u, v)
    R = u.ring
    if _backend(R, backend) == "universal":
        return _evaluate(("add",), [u, v], u.truncation, R)
    gu, gv = ghost(u).payloads(), ghost(v).payloads()
    new = {n: R.add(gu[n], gv[n]) for n in u.truncation}
    comps = components_from_ghost(R, u.truncation, new)
    return WittVector.from_payloads(R, u.truncation, [comps[n] for n in u.truncation])


def witt_mul(u: WittVector, v: WittVector, backend: str | None = None) -> WittVector:
    _same(u, v)
    R = u.ring
    if _backend(R, backend) == "universal":
        return _evaluate(("mul",), [u, v], u.truncation, R)
    gu, gv = ghost(u).payloads(), ghost(v).payloads()
    new = {n: R.mul(gu[n], gv[n]) for n in u.truncation}
    comps = components_from_ghost(R, u.truncation, new)
    return WittVector.from_payloads(R, u.truncation, [comps[n] for n in u.truncation])


def witt_neg(u: WittVector, backend: str | None = None) -> WittVector:
    R = u.ring
    if _backend(R, backend) == "universal":
        return _evaluate(("neg",), [u], u.truncation, R)
    return _ghost_route(u, u.truncation, lambda g, n: R.neg(g[n]))


def witt_sub(u: WittVector, v: WittVector, backend: str | None = None) -> WittVector:
    return witt_add(u, witt_neg(v, backend), backend)


def witt_zero(ring: Ring, truncation: TruncationSet) -> WittVector:
    return WittVector.from_payloads(ring, truncation, [ring.zero() for _ in truncation])


def teichmuller(r: RingElement, truncation: TruncationSet) -> WittVector:
    """``<r> = (r, 0, 0, ...)``."""
    R = r.ring
    return WittVector.from_payloads(R, truncation,
                                    [r.value if n == 1 else R.zero() for n in truncation])


def witt_one(ring: Ring, truncation: TruncationSet) -> WittVector:
    return teichmuller(ring.one_element(), truncation)


@lru_cache(maxsize=1024)
def _rational_witt(q, truncation: TruncationSet) -> tuple:
    Q = Rationals()
    comps = components_from_ghost(Q, truncation, {n: q for n in truncation})
    return tuple(comps[n] for n in truncation)


def witt_scalar(q, ring: Ring, truncation: TruncationSet) -> WittVector:
    """Image of the rational ``q`` under ``Z_S -> W_T(ring)``.

    The Witt vector of ``q`` is computed in ``W_T(Q)`` (its components are
    integral wherever ``q`` is) and mapped into ``ring`` componentwise.
    """
    comps = _rational_witt(mpq(q), truncation)
    return WittVector.from_payloads(ring, truncation, [ring.from_rational(c) for c in comps])


def frobenius(k: int, w, backend: str | None = None):
    """``F_k``: ghost side reads index ``nk``; Witt side is its ghost conjugate over ``T/k``."""
    if isinstance(w, GhostVector):
        return frobenius_ghost(k, w)
    if k < 1:
        raise ValueError("k must be positive")
    out_t = w.truncation.divided(k)
    if k == 1:
        return w
    if _backend(w.ring, backend) == "universal":
        return _evaluate(("frobenius", k), [w], out_t, w.ring)
    return _ghost_route(w, out_t, lambda g, n: g[n * k])


def verschiebung(k: int, w, target: TruncationSet | None = None):
    """``V_k``: ghost side ``k * g_{n/k}``; Witt side ``(V_k a)_n = a_{n/k}`` (no factor ``k``)."""
    if isinstance(w, GhostVector):
        return verschiebung_ghost(k, w, target)
    if k < 1:
        raise ValueError("k must be positive")
    target = _check_target(k, w.truncation, target)
    R = w.ring
    comps = w.payloads()
    return WittVector.from_payloads(R, target,
                                    [comps[n // k] if n % k == 0 else R.zero() for n in target])


def _check_zs(ring: Ring, primes: PrimeSet) -> None:
    if not ring.is_zs_algebra(primes):
        raise NotApplicable(
            f"{ring.spec()} is not a Z_S-algebra for P={list(primes.primes)}")


def phi_s(w, primes: PrimeSet, backend: str | None = None):
    """The idempotent projector ``phi_S``; ghost action ``g_n -> g_{n_S}``."""
    if isinstance(w, GhostVector):
        return phi_s_ghost(w, primes)
    _check_zs(w.ring, primes)
    if _backend(w.ring, backend) == "universal":
        return _evaluate(("phi_s", primes.primes), [w], w.truncation, w.ring)
    return _ghost_route(w, w.truncation, lambda g, n: g[s_part(n, primes)])


phi_s_witt = phi_s


def pr(sub: TruncationSet, w: WittVector) -> WittVector:
    """Restriction ``W_T -> W_{T'}`` to a divisor-stable ``T'`` inside ``T``."""
    if not sub.issubset(w.truncation):
        raise ValueError(f"{sub} is not contained in {w.truncation}")
    return WittVector(w.ring, sub, tuple(w[n] for n in sub))


def phi_bar(w: WittVector, primes: PrimeSet, N: int, backend: str | None = None) -> WittVector:
    """Splitting ``W_{S_N}(R) -> W_N(R)`` of ``pr_{S_N}``; ghost entry ``n`` is ``g_{n_S}``."""
    expected = s_truncation(primes, N)
    if w.truncation != expected:
        raise DescriptorMismatch(f"phi_bar expects a Witt vector over S_N = {expected}, got {w.truncation}")
    _check_zs(w.ring, primes)
    out_t = TruncationSet.full(N)
    if _backend(w.ring, backend) == "universal":
        return _evaluate(("phi_s", primes.primes), [w], out_t, w.ring)
    return _ghost_route(w, out_t, lambda g, n: g[s_part(n, primes)])
