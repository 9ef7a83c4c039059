import pytest
from hypothesis import given, strategies as st

from helpers import polynomials, scalars, witt_vectors
from wittring.errors import DescriptorMismatch, NotApplicable, NotDivisible
from wittring.rings import Integers, PolynomialRing, Rationals, Residue, SLocalIntegers, parse_ring
from wittring.trunc import PrimeSet, TruncationSet, s_part, s_truncation
from wittring.witt import (GhostVector, WittVector, frobenius, from_ghost, ghost,
                           lambda_log_derivative, lambda_mul, lambda_to_witt, phi_bar, phi_s,
                           phi_s_ghost, pr, t_l, teichmuller, verschiebung, witt_add, witt_mul,
                           witt_neg, witt_one, witt_scalar, witt_to_lambda, witt_zero)

Z = Integers()
P2, P3, P23 = PrimeSet([2]), PrimeSet([3]), PrimeSet([2, 3])
T1 = TruncationSet.full(2)
T2 = TruncationSet.full(3)
T3 = TruncationSet.full(4)
T4 = TruncationSet.full(5)
T6 = TruncationSet.full(7)


def vec(R, T, *cs):
    return WittVector(R, T, tuple(R(c) for c in cs))


def gvec(R, T, *cs):
    return GhostVector(R, T, tuple(R(c) if not isinstance(c, str) else R.parse(c) for c in cs))


def symbolic(names):
    R = PolynomialRing(SLocalIntegers(P2), names)
    return R, [R.generators()[n] for n in names]


# -- ghost map -------------------------------------------------------------------

def test_ghost_examples():
    assert str(ghost(teichmuller(Z(2), T3))) == "(2, 4, 8)"
    assert str(ghost(vec(Z, T2, 1, 1))) == "(1, 3)"
    assert ghost(witt_zero(Z, T4)) == gvec(Z, T4, 0, 0, 0, 0)


def test_from_ghost_examples():
    R, (r,) = symbolic(["r"])
    g = GhostVector(R, T4, tuple(r**n for n in T4))
    assert from_ghost(g) == teichmuller(r, T4)
    assert from_ghost(gvec(Z, T2, 1, 3)) == vec(Z, T2, 1, 1)
    with pytest.raises(NotDivisible, match="not divisible"):
        from_ghost(gvec(Z, T2, 0, 1))


# -- ring operations -------------------------------------------------------------

def test_add_and_mul_examples():
    assert witt_add(vec(Z, T2, 1, 0), vec(Z, T2, 1, 0)) == vec(Z, T2, 2, -1)
    assert witt_mul(vec(Z, T2, 0, 1), vec(Z, T2, 0, 1)) == vec(Z, T2, 0, 2)


@given(witt_vectors(Z, T4, scalars(Z)))
def test_units(u):
    assert u + witt_zero(Z, T4) == u
    assert u * witt_one(Z, T4) == u
    assert u - u == witt_zero(Z, T4)


def test_mismatched_operands():
    with pytest.raises(DescriptorMismatch):
        witt_add(vec(Z, T2, 1, 0), vec(Z, T3, 1, 0, 0))
    with pytest.raises(DescriptorMismatch):
        witt_add(vec(Z, T2, 1, 0), vec(Rationals(), T2, 1, 0))


def test_backend_choice():
    R9 = Residue(9, P3)
    with pytest.raises(NotApplicable):
        witt_add(vec(R9, T2, 1, 0), vec(R9, T2, 1, 0), backend="ghost")


def _lift(w, R):
    return WittVector(R, w.truncation, tuple(R(int(c.value)) for c in w.components))


def _reduce(w, R):
    return WittVector(R, w.truncation, tuple(R(int(c.value) % R.modulus) for c in w.components))


R9 = Residue(9, P3)
T8 = TruncationSet.full(9)


@given(witt_vectors(R9, T8, scalars(R9)), witt_vectors(R9, T8, scalars(R9)))
def test_torsion_arithmetic_matches_integer_lift(u, v):
    # oracle: compute over Z by the ghost round trip, then reduce mod 9
    for op in (witt_add, witt_mul):
        assert op(u, v) == _reduce(op(_lift(u, Z), _lift(v, Z)), R9)
    assert witt_neg(u) == _reduce(witt_neg(_lift(u, Z)), R9)


@given(witt_vectors(R9, T8, scalars(R9)), witt_vectors(R9, T8, scalars(R9)))
def test_ghost_is_a_homomorphism_over_torsion_rings(u, v):
    assert ghost(u + v) == ghost(u) + ghost(v)
    assert ghost(u * v) == ghost(u) * ghost(v)


ZX = PolynomialRing(SLocalIntegers(P2), ["X"])


@given(witt_vectors(ZX, T4, polynomials(ZX, 2, 3)), witt_vectors(ZX, T4, polynomials(ZX, 2, 3)))
def test_backends_agree_on_torsion_free_rings(u, v):
    for op in (witt_add, witt_mul):
        assert op(u, v, "ghost") == op(u, v, "universal")
    assert witt_neg(u, "ghost") == witt_neg(u, "universal")


@given(witt_vectors(Z, T6, scalars(Z)), witt_vectors(Z, T6, scalars(Z)), witt_vectors(Z, T6, scalars(Z)))
def test_witt_ring_axioms(u, v, w):
    assert (u + v) + w == u + (v + w)
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w


def test_witt_scalar():
    assert witt_scalar(2, Z, T4) == witt_add(witt_one(Z, T4), witt_one(Z, T4))
    assert ghost(witt_scalar(5, Z, T6)) == gvec(Z, T6, *[5] * 6)
    assert witt_scalar(4, R9, T8) == _reduce(witt_scalar(4, Z, T8), R9)


# -- Teichmueller ------------------------------------------------------------------

@given(scalars(Z), scalars(Z))
def test_teichmuller_is_multiplicative(a, b):
    assert teichmuller(a, T6) * teichmuller(b, T6) == teichmuller(a * b, T6)
    assert ghost(teichmuller(a, T6)) == GhostVector(Z, T6, tuple(a**n for n in T6))


def test_teichmuller_one_is_unit():
    assert teichmuller(Z(1), T6) == witt_one(Z, T6)


# -- Frobenius and Verschiebung --------------------------------------------------------

def test_frobenius_ghost_example():
    R, g = symbolic(["g1", "g2", "g3", "g4"])
    out = frobenius(2, GhostVector(R, T4, tuple(g)))
    assert out == GhostVector(R, T2, (g[1], g[3]))


def test_verschiebung_ghost_example():
    R, g = symbolic(["g1", "g2"])
    out = verschiebung(2, GhostVector(R, T2, tuple(g)), T4)
    assert out == GhostVector(R, T4, (R.zero_element(), 2 * g[0], R.zero_element(), 2 * g[1]))


@given(scalars(Z), st.integers(1, 4))
def test_frobenius_of_teichmuller(r, k):
    assert frobenius(k, teichmuller(r, T8)) == teichmuller(r**k, T8.divided(k))


@given(witt_vectors(Z, T6, scalars(Z)))
def test_frobenius_and_verschiebung_of_one_are_identity(w):
    assert frobenius(1, w) == w
    assert verschiebung(1, w) == w


@given(witt_vectors(Z, T8, scalars(Z)), witt_vectors(Z, T8, scalars(Z)), st.integers(2, 4))
def test_frobenius_is_a_ring_homomorphism(u, v, k):
    assert frobenius(k, u + v) == frobenius(k, u) + frobenius(k, v)
    assert frobenius(k, u * v) == frobenius(k, u) * frobenius(k, v)
    assert ghost(frobenius(k, u)) == frobenius(k, ghost(u))


@given(witt_vectors(R9, T8, scalars(R9)), st.integers(2, 4))
def test_frobenius_over_torsion_ring_matches_lift(u, k):
    assert frobenius(k, u) == _reduce(frobenius(k, _lift(u, Z)), R9)


@given(witt_vectors(Z, T4, scalars(Z)), witt_vectors(Z, T4, scalars(Z)), st.integers(2, 4))
def test_verschiebung_additive_and_ghost_equivariant(u, v, k):
    T = TruncationSet.full(5 * k)
    assert T.divided(k) == T4
    assert verschiebung(k, u + v, T) == verschiebung(k, u, T) + verschiebung(k, v, T)
    assert ghost(verschiebung(k, u, T)) == verschiebung(k, ghost(u), T)


@given(witt_vectors(Z, T4, scalars(Z)), st.integers(2, 4))
def test_frobenius_after_verschiebung_is_multiplication_by_k(w, k):
    T = TruncationSet.full(5 * k)
    assert frobenius(k, verschiebung(k, w, T)) == witt_scalar(k, Z, T4) * w
    g = ghost(w)
    assert frobenius(k, verschiebung(k, g, T)) == g.scale(k)


# -- T_l and phi_S ---------------------------------------------------------------

ZS2G, G6 = symbolic(["g1", "g2", "g3", "g4", "g5", "g6"])
GHOST6 = GhostVector(ZS2G, T6, tuple(G6))


def test_t_l_example():
    g = G6
    out = t_l(3, GHOST6, P2)
    assert out == GhostVector(ZS2G, T6, (g[0], g[1], g[0], g[3], g[4], g[1]))
    assert t_l(3, GHOST6, P2, method="operator") == out


def test_t_l_identity_and_errors():
    assert t_l(7, GHOST6, P2) == GHOST6
    with pytest.raises(NotApplicable, match="l in S"):
        t_l(2, GHOST6, P2)


def test_t_l_commute():
    R, g = symbolic([f"g{i}" for i in range(1, 31)])
    G = GhostVector(R, TruncationSet.full(31), tuple(g))
    assert t_l(3, t_l(5, G, P2), P2) == t_l(5, t_l(3, G, P2), P2)
    assert t_l(3, t_l(5, G, P2, "operator"), P2, "operator") == t_l(3, t_l(5, G, P2), P2)


def test_phi_s_ghost_example():
    g = G6
    expected = GhostVector(ZS2G, T6, (g[0], g[1], g[0], g[3], g[0], g[1]))
    for method in ("componentwise", "limit", "double_sum"):
        assert phi_s_ghost(GHOST6, P2, method) == expected
    assert phi_s_ghost(expected, P2) == expected


@pytest.mark.parametrize("P,N", [(P2, 13), (P3, 13), (P23, 20), (PrimeSet([5]), 11)])
def test_phi_s_formulas_agree(P, N):
    R = PolynomialRing(SLocalIntegers(P), [f"g{i}" for i in range(1, N)])
    G = GhostVector(R, TruncationSet.full(N), tuple(R.generators()[f"g{i}"] for i in range(1, N)))
    a = phi_s_ghost(G, P, "componentwise")
    assert a == phi_s_ghost(G, P, "limit") == phi_s_ghost(G, P, "double_sum")
    assert phi_s_ghost(a, P) == a


def test_phi_s_witt_on_teichmuller():
    R, (r,) = symbolic(["r"])
    w = phi_s(teichmuller(r, T3), P2)
    assert str(w) == "(r, 0, (-r^3 + r)/3)"
    assert ghost(w) == GhostVector(R, T3, (r, r**2, r))
    assert phi_s(teichmuller(r, T3), P2, backend="universal") == w


def test_phi_s_witt_needs_zs_algebra():
    with pytest.raises(NotApplicable):
        phi_s(vec(Z, T3, 1, 0, 0), P2)


ZS2 = SLocalIntegers(P2)


@given(witt_vectors(ZS2, T8, scalars(ZS2)))
def test_phi_s_idempotent(w):
    once = phi_s(w, P2)
    assert phi_s(once, P2) == once
    assert ghost(once) == phi_s_ghost(ghost(w), P2)


@given(witt_vectors(Z, T8, scalars(Z)))
def test_phi_s_trivial_when_s_holds_every_prime_below_n(w):
    P = PrimeSet([2, 3, 5, 7])
    big = SLocalIntegers(P)
    wb = WittVector(big, T8, tuple(big(int(c.value)) for c in w.components))
    assert phi_s(wb, P) == wb


@given(witt_vectors(R9, T8, scalars(R9)))
def test_phi_s_over_torsion_ring_is_idempotent(w):
    once = phi_s(w, P3)
    assert phi_s(once, P3) == once


# -- restriction and splitting ---------------------------------------------------------

def test_pr_examples():
    w = vec(Z, T4, 1, 2, 3, 4)
    assert pr(T1, w) == vec(Z, T1, 1)
    assert pr(T4, w) == w
    assert pr(T1, pr(T2, w)) == pr(T1, w)


@pytest.mark.parametrize("R,P", [(ZS2, P2), (R9, P3)])
@pytest.mark.parametrize("N", [5, 9])
def test_phi_bar_splits_projection(R, P, N):
    S = s_truncation(P, N)

    @given(witt_vectors(R, S, scalars(R)), witt_vectors(R, S, scalars(R)))
    def check(u, v):
        out = phi_bar(u, P, N)
        assert out.truncation == TruncationSet.full(N)
        assert pr(S, out) == u
        assert phi_bar(u + v, P, N) == out + phi_bar(v, P, N)
        assert phi_bar(u * v, P, N) == out * phi_bar(v, P, N)
        g = ghost(out)
        assert all(g[n] == ghost(u)[s_part(n, P)] for n in g.truncation)

    check()


def test_phi_bar_trivial_level_and_mismatch():
    assert phi_bar(vec(ZS2, T1, 5), P2, 2) == vec(ZS2, T1, 5)
    with pytest.raises(DescriptorMismatch):
        phi_bar(vec(ZS2, T3, 1, 0, 0), P2, 4)


# -- Lambda-series -------------------------------------------------------------------

def test_witt_to_lambda_examples():
    R, (a,) = symbolic(["a"])
    assert str(witt_to_lambda(teichmuller(a, T4))) == "1 - a t"
    assert str(witt_to_lambda(vec(Z, T2, 1, 1))) == "1 - t - t^2"
    with pytest.raises(DescriptorMismatch):
        witt_to_lambda(vec(Z, TruncationSet([1, 2, 4]), 1, 1, 1))


@given(witt_vectors(R9, T8, scalars(R9)))
def test_lambda_round_trip(w):
    assert lambda_to_witt(witt_to_lambda(w)) == w


def test_log_derivative_of_linear_series():
    R, (a,) = symbolic(["a"])
    g = lambda_log_derivative(witt_to_lambda(teichmuller(a, T6)))
    assert g == GhostVector(R, T6, tuple(a**n for n in T6))


Q = Rationals()


@given(witt_vectors(Q, T8, scalars(Q, 3)), witt_vectors(Q, T8, scalars(Q, 3)))
def test_lambda_operations_map_to_ghost_operations(u, v):
    su, sv = witt_to_lambda(u), witt_to_lambda(v)
    assert lambda_log_derivative(su) == ghost(u)
    assert lambda_log_derivative(su + sv) == ghost(u) + ghost(v)
    assert lambda_log_derivative(lambda_mul(su, sv)) == ghost(u) * ghost(v)
    assert witt_to_lambda(u + v) == su + sv
    assert witt_to_lambda(u * v) == lambda_mul(su, sv)
