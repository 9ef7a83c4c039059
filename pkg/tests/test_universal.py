import threading

import pytest
import sympy

from wittring.trunc import PrimeSet, divisors, s_part
from wittring.witt.universal import UniversalFamily, family, universal_polynomial
from wittring.rings.scalars import Integers


def _sym(poly):
    return sympy.expand(sympy.sympify(str(poly).replace("^", "**")))


def _oracle(rule, bound, inputs=None):
    """Component polynomials solved from the ghost equations with sympy."""
    inputs = inputs or bound
    x = {d: sympy.Symbol(f"x{d}") for d in range(1, inputs + 1)}
    y = {d: sympy.Symbol(f"y{d}") for d in range(1, inputs + 1)}

    def ghost(v, m):
        return sum(d * v[d] ** (m // d) for d in divisors(m))

    out = {}
    for n in range(1, bound + 1):
        target = rule(lambda m: ghost(x, m), lambda m: ghost(y, m), n)
        rest = sum(d * out[d] ** (n // d) for d in divisors(n)[:-1])
        out[n] = sympy.expand((target - rest) / n)
    return out


@pytest.mark.parametrize("op,rule", [
    ("add", lambda gx, gy, n: gx(n) + gy(n)),
    ("mul", lambda gx, gy, n: gx(n) * gy(n)),
    ("neg", lambda gx, gy, n: -gx(n)),
])
def test_ring_operations_match_sympy(op, rule):
    expected = _oracle(rule, 6)
    for n in range(1, 7):
        assert _sym(universal_polynomial(op, n)) == expected[n], n


@pytest.mark.parametrize("k", [2, 3])
def test_frobenius_matches_sympy(k):
    expected = _oracle(lambda gx, gy, n: gx(n * k), 4, 4 * k)
    for n in range(1, 5):
        assert _sym(universal_polynomial("frobenius", n, k)) == expected[n]


@pytest.mark.parametrize("primes", [PrimeSet([2]), PrimeSet([3]), PrimeSet([2, 3])])
def test_phi_s_matches_sympy(primes):
    expected = _oracle(lambda gx, gy, n: gx(s_part(n, primes)), 8)
    for n in range(1, 9):
        assert _sym(universal_polynomial("phi_s", n, primes)) == expected[n]


def test_closed_forms():
    x1, y1, x2, y2 = sympy.symbols("x1 y1 x2 y2")
    assert _sym(universal_polynomial("add", 2)) == x2 + y2 - x1 * y1
    assert _sym(universal_polynomial("mul", 2)) == x1**2 * y2 + y1**2 * x2 + 2 * x2 * y2
    assert _sym(universal_polynomial("frobenius", 1, 2)) == x1**2 + 2 * x2


def test_addition_polynomials_have_integer_coefficients():
    for n in range(1, 9):
        assert universal_polynomial("add", n).ring.spec().startswith("ZZ[")


def test_family_is_memoized():
    assert family(("add",)) is family(("add",))
    assert family(("phi_s", (2,))) is family(("phi_s", (2,)))
    with pytest.raises(KeyError):
        family(("unknown",))


def test_concurrent_construction_is_consistent():
    fam = UniversalFamily("add", 2, lambda R, G, n: R.add(G(0, n), G(1, n)), Integers(), lambda n: n)
    order = [12, 5, 9, 3, 11, 7, 2, 10]
    results = [None] * 16
    start = threading.Barrier(16)

    def work(i):
        start.wait()
        results[i] = [str(fam.polynomial(n)) for n in order[i % 8:] + order[:i % 8]]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(16)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    reference = {n: str(universal_polynomial("add", n)) for n in order}
    for i, r in enumerate(results):
        rotated = order[i % 8:] + order[:i % 8]
        assert r == [reference[n] for n in rotated]
