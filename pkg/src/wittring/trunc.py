"""Number-theoretic substrate: prime sets, truncation sets, S-parts and partitions.

A prime set ``P`` stands for the multiplicatively closed, divisor-stable set
``S`` of all positive integers whose prime factors lie in ``P``.  Everything
here works at an explicit finite bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Iterable, Iterator

# Deterministic for n < 3.3e24 (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` by trial division, as ``((p, e), ...)``."""
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def ord_p(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``n != 0``."""
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """All divisors of ``n`` in ascending order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def primes_below(bound: int) -> list[int]:
    return [q for q in range(2, bound) if is_prime(q)]


@dataclass(frozen=True)
class PrimeSet:
    """Finite set of primes generating ``S``; empty means ``S = {1}``."""

    primes: tuple[int, ...] = ()

    def __init__(self, primes: Iterable[int] = ()):
        ps = tuple(int(p) for p in primes)
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        if list(ps) != sorted(set(ps)):
            ps = tuple(sorted(set(ps)))
        object.__setattr__(self, "primes", ps)

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __repr__(self) -> str:
        return "PrimeSet({" + ", ".join(map(str, self.primes)) + "})"

    @property
    def radical(self) -> int:
        return prod(self.primes)

    def is_smooth(self, n: int) -> bool:
        """True iff every prime factor of ``n`` lies in the set (``n`` is in S)."""
        return s_part(n, self) == n

    def is_coprime(self, n: int) -> bool:
        """True iff ``n`` shares no prime with the set (``n`` is a unit of Z_S)."""
        return gcd(abs(n), self.radical) == 1

    def s_part(self, n: int) -> int:
        return s_part(n, self)


def s_part(n: int, primes: PrimeSet) -> int:
    """Largest divisor of ``n`` whose prime factors all lie in ``primes``."""
    if n < 1:
        raise ValueError(f"s_part expects a positive integer, got {n}")
    out = 1
    for p in primes.primes:
        while n % p == 0:
            n //= p
            out *= p
    return out


@dataclass(frozen=True)
class TruncationSet:
    """Finite divisor-stable set of positive integers, kept in ascending order."""

    members: tuple[int, ...]

    def __init__(self, members: Iterable[int]):
        ms = tuple(sorted(set(int(m) for m in members)))
        if ms and ms[0] < 1:
            raise ValueError("truncation sets contain positive integers only")
        present = set(ms)
        for n in ms:
            for d in divisors(n):
                if d not in present:
                    raise ValueError(f"not divisor stable: {d} divides {n} but is missing")
        object.__setattr__(self, "members", ms)

    @classmethod
    def full(cls, N: int) -> "TruncationSet":
        """``{1, ..., N-1}``."""
        return cls(range(1, N))

    @classmethod
    def closure(cls, ns: Iterable[int]) -> "TruncationSet":
        """Smallest truncation set containing ``ns``."""
        out: set[int] = set()
        for n in ns:
            out.update(divisors(n))
        return cls(out)

    def __contains__(self, n: int) -> bool:
        return n in self._set

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"

    @property
    def _set(self) -> frozenset[int]:
        s = self.__dict__.get("_cached_set")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_cached_set", s)
        return s

    @property
    def bound(self) -> int:
        """Largest member (0 for the empty set)."""
        return self.members[-1] if self.members else 0

    def is_full(self) -> bool:
        return self.members == tuple(range(1, len(self.members) + 1))

    def divided(self, k: int) -> "TruncationSet":
        """``T/k = {n : n*k in T}``."""
        return TruncationSet(n // k for n in self.members if n % k == 0)

    def issubset(self, other: "TruncationSet") -> bool:
        return self._set <= other._set

    def index(self, n: int) -> int:
        return self.members.index(n)


def s_truncation(primes: PrimeSet, N: int) -> TruncationSet:
    """``S_N``: all S-smooth integers below ``N``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    out = [1] if N > 1 else []
    for p in primes.primes:
        out = [m * p**i for m in out for i in range(N) if m * p**i < N]
        out = sorted(set(out))
    return TruncationSet(out)


@dataclass(frozen=True, order=True)
class MultiIndex:
    """Finitely supported map ``k -> nu_k`` with zero entries omitted."""

    entries: tuple[tuple[int, int], ...]

    def __init__(self, entries: dict[int, int] | Iterable[tuple[int, int]]):
        items = entries.items() if isinstance(entries, dict) else entries
        clean = tuple(sorted((int(k), int(v)) for k, v in items if v))
        for k, v in clean:
            if k < 1 or v < 0:
                raise ValueError(f"bad multi-index entry {k}: {v}")
        object.__setattr__(self, "entries", clean)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def size(self) -> int:
        """``|nu| = sum nu_k``."""
        return sum(v for _, v in self.entries)

    @property
    def weight(self) -> int:
        """``||nu|| = sum k * nu_k``."""
        return sum(k * v for k, v in self.entries)

    def parts(self) -> tuple[int, ...]:
        """Ascending list of parts, ``k`` repeated ``nu_k`` times."""
        return tuple(k for k, v in self.entries for _ in range(v))

    def __repr__(self) -> str:
        return "{" + ", ".join(f"{k}:{v}" for k, v in self.entries) + "}"


def _partitions(n: int, parts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # parts ascending; yields ascending part lists
    if n == 0:
        yield ()
        return
    for i, k in enumerate(parts):
        if k > n:
            break
        for rest in _partitions(n - k, parts[i:]):
            yield (k,) + rest


@lru_cache(maxsize=1024)
def _s_partitions(n: int, primes: PrimeSet) -> tuple[MultiIndex, ...]:
    parts = tuple(k for k in range(1, n + 1) if primes.is_smooth(k))
    out = []
    for plist in sorted(_partitions(n, parts)):
        counts: dict[int, int] = {}
        for k in plist:
            counts[k] = counts.get(k, 0) + 1
        out.append(MultiIndex(counts))
    return tuple(out)


def s_partitions(n: int, primes: PrimeSet) -> list[MultiIndex]:
    """All multi-indices with parts in S and weight ``n``, lexicographic on part lists."""
    if n < 1:
        raise ValueError("n must be positive")
    return list(_s_partitions(n, primes))
