"""Canonical text rendering of linear combinations."""

from __future__ import annotations

from math import lcm

from gmpy2 import mpq


def _needs_parens(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and ch in "+-" and i > 0:
            return True
    return False


def _join(terms: list[str]) -> str:
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _term(coeff: str, basis: str) -> str:
    if not basis:
        return coeff
    if coeff == "1":
        return basis
    if coeff == "-1":
        return "-" + basis
    return f"{coeff}*{basis}"


def render_combination(items, coeff_ring) -> str:
    """Render ``sum c_i * b_i`` given ``(basis_string, coefficient_payload)`` pairs.

    An empty basis string denotes the unit.  Items are rendered in the given
    order; rational coefficients share a common denominator pulled outside.
    """
    if not items:
        return "0"
    if coeff_ring.native:
        den = 1
        for _, c in items:
            den = lcm(den, int(mpq(c).denominator))
        if den > 1 and len(items) > 1:
            inner = _join([_term(str(mpq(c) * den), b) for b, c in items])
            return f"({inner})/{den}"
        return _join([_term(str(mpq(c)), b) for b, c in items])
    terms = []
    for b, c in items:
        cs = coeff_ring.render(c)
        if b and _needs_parens(cs):
            cs = f"({cs})"
        terms.append(_term(cs, b))
    return _join(terms)
