"""Immutable value types: Witt vectors, ghost vectors and truncated Lambda-series."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DescriptorMismatch
from ..rings.base import Ring, RingElement
from ..rings.render import _needs_parens
from ..trunc import TruncationSet


def _check_entries(ring: Ring, entries, expected: int, what: str):
    if len(entries) != expected:
        raise DescriptorMismatch(f"{what}: {len(entries)} entries for {expected} indices")
    for e in entries:
        if not isinstance(e, RingElement) or e.ring != ring:
            raise DescriptorMismatch(f"{what} entry {e!r} is not in {ring.spec()}")


def _render_tuple(entries) -> str:
    return "(" + ", ".join(str(e) for e in entries) + ")"


@dataclass(frozen=True)
class WittVector:
    """Components ``(a_n)_{n in T}`` of an element of ``W_T(R)``."""

    ring: Ring
    truncation: TruncationSet
    components: tuple[RingElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        _check_entries(self.ring, self.components, len(self.truncation), "Witt vector")

    @classmethod
    def from_payloads(cls, ring: Ring, truncation: TruncationSet, payloads) -> "WittVector":
        return cls(ring, truncation, tuple(RingElement(ring, p) for p in payloads))

    def __getitem__(self, n: int) -> RingElement:
        return self.components[self.truncation.index(n)]

    def payloads(self) -> dict[int, object]:
        return {n: c.value for n, c in zip(self.truncation, self.components)}

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other):
        from .ops import witt_add
        return witt_add(self, other)

    def __sub__(self, other):
        from .ops import witt_add, witt_neg
        return witt_add(self, witt_neg(other))

    def __neg__(self):
        from .ops import witt_neg
        return witt_neg(self)

    def __mul__(self, other):
        from .ops import witt_mul
        return witt_mul(self, other)

    def __str__(self) -> str:
        return _render_tuple(self.components)


@dataclass(frozen=True)
class GhostVector:
    """Ghost entries ``(g_n)_{n in T}``; ring operations are entrywise."""

    ring: Ring
    truncation: TruncationSet
    entries: tuple[RingElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        _check_entries(self.ring, self.entries, len(self.truncation), "ghost vector")

    @classmethod
    def from_payloads(cls, ring: Ring, truncation: TruncationSet, payloads) -> "GhostVector":
        return cls(ring, truncation, tuple(RingElement(ring, p) for p in payloads))

    def __getitem__(self, n: int) -> RingElement:
        return self.entries[self.truncation.index(n)]

    def payloads(self) -> dict[int, object]:
        return {n: e.value for n, e in zip(self.truncation, self.entries)}

    def _pair(self, other: "GhostVector"):
        if not isinstance(other, GhostVector):
            return NotImplemented
        if other.ring != self.ring or other.truncation != self.truncation:
            raise DescriptorMismatch("ghost vectors over different rings or truncation sets")
        return other

    def __add__(self, other):
        o = self._pair(other)
        if o is NotImplemented:
            return o
        return GhostVector(self.ring, self.truncation, tuple(a + b for a, b in zip(self.entries, o.entries)))

    def __sub__(self, other):
        o = self._pair(other)
        if o is NotImplemented:
            return o
        return GhostVector(self.ring, self.truncation, tuple(a - b for a, b in zip(self.entries, o.entries)))

    def __mul__(self, other):
        o = self._pair(other)
        if o is NotImplemented:
            return o
        return GhostVector(self.ring, self.truncation, tuple(a * b for a, b in zip(self.entries, o.entries)))

    def __neg__(self):
        return GhostVector(self.ring, self.truncation, tuple(-a for a in self.entries))

    def scale(self, q) -> "GhostVector":
        return GhostVector(self.ring, self.truncation, tuple(a.scale(q) for a in self.entries))

    def __str__(self) -> str:
        return _render_tuple(self.entries)


@dataclass(frozen=True)
class LambdaSeries:
    """``1 + a_1 t + ... + a_{N-1} t^{N-1}`` modulo ``t^N``."""

    ring: Ring
    precision: int
    coefficients: tuple[RingElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        _check_entries(self.ring, self.coefficients, self.precision - 1, "Lambda-series")

    @classmethod
    def from_series(cls, ring: Ring, series: list) -> "LambdaSeries":
        """From payloads ``[1, a_1, ..., a_{N-1}]`` (constant term must be 1)."""
        if series[0] != ring.one():
            raise ValueError("Lambda-series must have constant term 1")
        return cls(ring, len(series), tuple(RingElement(ring, p) for p in series[1:]))

    def series(self) -> list:
        """Payloads ``[1, a_1, ..., a_{N-1}]``."""
        return [self.ring.one()] + [c.value for c in self.coefficients]

    def __getitem__(self, i: int) -> RingElement:
        if i == 0:
            return self.ring.one_element()
        return self.coefficients[i - 1]

    def __add__(self, other):
        from .series import lambda_add
        return lambda_add(self, other)

    def __mul__(self, other):
        from .series import lambda_mul
        return lambda_mul(self, other)

    def substitute_negated(self) -> "LambdaSeries":
        """The series with ``t`` replaced by ``-t``."""
        return LambdaSeries(self.ring, self.precision,
                            tuple(c if i % 2 == 0 else -c
                                  for i, c in enumerate(self.coefficients, start=1)))

    def __str__(self) -> str:
        out = "1"
        for i, c in enumerate(self.coefficients, start=1):
            if c.is_zero():
                continue
            t = "t" if i == 1 else f"t^{i}"
            s = str(c)
            if s.startswith("-") and not _needs_parens(s[1:]) and not s.startswith("-("):
                sign, s = " - ", s[1:]
            else:
                sign = " + "
            if _needs_parens(s):
                s = f"({s})"
            out += f"{sign}{t}" if s == "1" else f"{sign}{s} {t}"
        return out
