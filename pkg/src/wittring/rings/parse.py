"""Parser for element expressions.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "[" label "]" | "(" expr ")"

``NAME`` is a ring generator (polynomial variable) or a caller-supplied named
element; ``[label]`` is a monoid-algebra basis symbol, the label being parsed
by the monoid.  Division is allowed only by nonzero rational constants.
"""

from __future__ import annotations

import re

from gmpy2 import mpq

from ..errors import ParseError
from .base import Ring, RingElement

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\[)|([-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r} at {i} in {text!r}")
        if m.group(1):
            out.append(("int", m.group(1)))
            i = m.end()
        elif m.group(2):
            out.append(("name", m.group(2)))
            i = m.end()
        elif m.group(3):
            depth, j = 1, m.end()
            while j < n and depth:
                if text[j] == "[":
                    depth += 1
                elif text[j] == "]":
                    depth -= 1
                j += 1
            if depth:
                raise ParseError(f"unbalanced '[' in {text!r}")
            out.append(("symbol", text[m.end():j - 1]))
            i = j
        else:
            out.append(("op", m.group(4)))
            i = m.end()
    return out


def _symbol(ring: Ring, label: str) -> RingElement:
    from .extension import RationalExtension
    from .monoid import MonoidAlgebra
    from .polynomial import PolynomialRing

    if isinstance(ring, (MonoidAlgebra, RationalExtension)):
        return ring.symbol(label)
    if isinstance(ring, PolynomialRing):
        inner = _symbol(ring.coeffs, label)
        return RingElement(ring, ring.constant(inner.value))
    raise ParseError(f"[{label}] is not an element of {ring.spec()}")


class _Parser:
    def __init__(self, ring: Ring, text: str, names: dict | None):
        self.ring = ring
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = dict(ring.generators())
        if names:
            self.names.update(names)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, value):
        kind, v = self.take()
        if v != value:
            raise ParseError(f"expected {value!r} in {self.text!r}")

    def lift(self, v) -> RingElement:
        if isinstance(v, RingElement):
            return v
        return RingElement(self.ring, self.ring.from_rational(v))

    def combine(self, op, a, b):
        if op == "/":
            if isinstance(b, RingElement):
                raise ParseError(f"division by a non-constant in {self.text!r}")
            if b == 0:
                raise ParseError(f"division by zero in {self.text!r}")
            if isinstance(a, RingElement):
                return a * RingElement(self.ring, self.ring.from_rational(1 / b))
            return a / b
        if not isinstance(a, RingElement) and not isinstance(b, RingElement):
            return {"+": a + b, "-": a - b, "*": a * b}[op]
        a, b = self.lift(a), self.lift(b)
        return {"+": a + b, "-": a - b, "*": a * b}[op]

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            v = self.combine(op, v, self.term())
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            v = self.combine(op, v, self.unary())
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            v = self.unary()
            return -v
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            v = v ** int(e)
        return v

    def atom(self):
        kind, v = self.take()
        if kind == "int":
            return mpq(int(v))
        if kind == "name":
            if v not in self.names:
                raise ParseError(f"undeclared name {v!r} in {self.text!r}")
            el = self.names[v]
            if el.ring != self.ring:
                raise ParseError(f"{v!r} lives in {el.ring.spec()}, not {self.ring.spec()}")
            return el
        if kind == "symbol":
            return _symbol(self.ring, v)
        if (kind, v) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {v!r} in {self.text!r}")


def parse_element(ring: Ring, text: str, names: dict | None = None) -> RingElement:
    """Parse ``text`` as an element of ``ring``."""
    p = _Parser(ring, text, names)
    if not p.tokens:
        raise ParseError("empty expression")
    v = p.expr()
    if p.pos != len(p.tokens):
        raise ParseError(f"trailing input in {text!r}")
    return p.lift(v)


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside parentheses and brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_tuple(ring: Ring, text: str, names: dict | None = None) -> list[RingElement]:
    """Parse ``"(a1, a2, ...)"`` into a list of elements."""
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise ParseError(f"expected a parenthesized tuple, got {text!r}")
    body = t[1:-1].strip()
    if not body:
        return []
    return [parse_element(ring, part, names) for part in split_top_level(body)]
