from functools import lru_cache
from math import gcd

import pytest
import sympy
from hypothesis import given, strategies as st

from wittring.trunc import (MultiIndex, PrimeSet, TruncationSet, divisors, factorize, is_prime,
                            moebius, ord_p, s_part, s_partitions, s_truncation)

P2, P3, P23 = PrimeSet([2]), PrimeSet([3]), PrimeSet([2, 3])


def test_s_part_examples():
    assert s_part(12, P2) == 4
    assert s_part(7, P23) == 1
    assert all(s_part(n, PrimeSet()) == 1 for n in range(1, 50))


def test_s_truncation_examples():
    assert list(s_truncation(P2, 9)) == [1, 2, 4, 8]
    assert list(s_truncation(P23, 7)) == [1, 2, 3, 4, 6]
    assert list(s_truncation(PrimeSet(), 100)) == [1]
    assert list(s_truncation(P2, 1)) == []


def test_moebius_and_divisors_examples():
    assert (moebius(1), moebius(6), moebius(12)) == (1, 1, 0)
    assert divisors(1) == (1,)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(13) == (1, 13)


def test_s_partitions_examples():
    assert s_partitions(1, P3) == [MultiIndex({1: 1})]
    assert s_partitions(2, P2) == [MultiIndex({1: 2}), MultiIndex({2: 1})]
    assert s_partitions(4, P2) == [MultiIndex({1: 4}), MultiIndex({1: 2, 2: 1}),
                                   MultiIndex({2: 2}), MultiIndex({4: 1})]


def test_multi_index_size_and_weight():
    nu = MultiIndex({1: 2, 4: 3})
    assert nu.size == 5
    assert nu.weight == 14
    assert MultiIndex({1: 0, 2: 1}).as_dict() == {2: 1}


def test_prime_set_validation():
    assert PrimeSet([3, 2]).primes == (2, 3)
    with pytest.raises(ValueError):
        PrimeSet([4])
    assert PrimeSet([2, 2]).primes == (2,)


def test_truncation_set_validation():
    with pytest.raises(ValueError):
        TruncationSet([1, 4])
    T = TruncationSet.closure([6, 4])
    assert list(T) == [1, 2, 3, 4, 6]
    assert list(T.divided(2)) == [1, 2, 3]
    assert TruncationSet.full(5).is_full() and not T.is_full()


@given(st.integers(1, 10**6))
def test_primality_and_factorization_match_sympy(n):
    assert is_prime(n) == sympy.isprime(n)
    assert dict(factorize(n)) == sympy.factorint(n)
    assert moebius(n) == sympy.mobius(n)


@given(st.integers(1, 3000))
def test_divisors_match_sympy(n):
    assert list(divisors(n)) == sympy.divisors(n)


@given(st.integers(1, 2000), st.sampled_from([P2, P3, P23, PrimeSet([2, 5, 7])]))
def test_s_part_divides_and_is_idempotent(n, P):
    m = s_part(n, P)
    assert n % m == 0 and P.is_smooth(m)
    assert s_part(m, P) == m
    assert all(ord_p(m, p) == ord_p(n, p) for p in P)


@given(st.integers(1, 300), st.integers(1, 300), st.sampled_from([P2, P3, P23]))
def test_s_part_multiplicative_on_coprime(m, n, P):
    if gcd(m, n) == 1:
        assert s_part(m * n, P) == s_part(m, P) * s_part(n, P)


def test_moebius_sums_vanish():
    for n in range(1, 400):
        assert sum(moebius(d) for d in divisors(n)) == (1 if n == 1 else 0)


@given(st.integers(1, 200), st.sampled_from([P2, P3, P23, PrimeSet()]))
def test_s_truncation_is_divisor_stable(N, P):
    T = s_truncation(P, N)
    assert set(T) == {n for n in range(1, N) if P.is_smooth(n)}
    for n in T:
        assert all(d in T for d in divisors(n))


def _naive_count(n: int, parts: tuple) -> int:
    @lru_cache(maxsize=None)
    def count(m, i):
        if m == 0:
            return 1
        if i == len(parts):
            return 0
        total, k = 0, 0
        while k * parts[i] <= m:
            total += count(m - k * parts[i], i + 1)
            k += 1
        return total
    return count(n, 0)


def _generating_function_count(n: int, parts: tuple) -> int:
    x = sympy.symbols("x")
    f = 1
    for k in parts:
        f *= sum(x ** (k * i) for i in range(n // k + 1))
    return sympy.Poly(sympy.expand(f), x).coeff_monomial(x**n)


@pytest.mark.parametrize("P", [P2, P3, P23])
def test_s_partition_counts(P):
    for n in range(1, 19):
        parts = tuple(s_truncation(P, n + 1))
        got = s_partitions(n, P)
        assert len(got) == _naive_count(n, parts) == _generating_function_count(n, parts)
        assert all(nu.weight == n for nu in got)
        assert len(set(got)) == len(got)
        keys = [list(nu.parts()) for nu in got]
        assert keys == sorted(keys)
