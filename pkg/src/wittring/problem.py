"""Problem files: a JSON document declaring primes, rings, lifts, ``pi`` and named elements.

Grammar (all keys optional unless stated, unknown keys rejected)::

    problem    := { "primes": [p, ...],             # default []
                    "N": INT,                       # truncation bound
                    "truncation": [n, ...],         # explicit index set for Witt vectors
                    "monoids": { NAME: monoid, ... },
                    "base": RING,                   # ring in the textual ring grammar
                    "target": RING,                 # R for kernel problems
                    "lifts": { "p": { VAR: EXPR } },
                    "pi": { VAR: EXPR },            # EXPR over the target
                    "elements": { NAME: EXPR, ... } }
    monoid     := { "elements": [LABEL, ...], "table": [[LABEL, ...], ...],
                    "unit": LABEL, "realization": { LABEL: EXPR } }

Names must be declared before they are used: monoids before the rings that
mention them, and each element may refer only to elements listed above it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import NotApplicable, ParseError
from .kernel import KernelProblem
from .lambda_ring import AdamsContext, MonoidAdamsContext
from .rings.base import Ring, RingElement
from .rings.monoid import FiniteMonoidTable, MonoidAlgebra
from .rings.spec import parse_ring
from .trunc import PrimeSet, TruncationSet

_KEYS = ("primes", "N", "truncation", "monoids", "base", "target", "lifts", "pi", "elements")
_MONOID_KEYS = ("elements", "table", "unit", "realization")


@dataclass
class ProblemFile:
    primes: PrimeSet = field(default_factory=PrimeSet)
    N: int | None = None
    truncation: TruncationSet | None = None
    monoids: dict = field(default_factory=dict)
    base: Ring | None = None
    target: Ring | None = None
    lifts: dict = field(default_factory=dict)
    pi: dict = field(default_factory=dict)
    elements: dict = field(default_factory=dict)

    @classmethod
    def from_text(cls, text: str) -> "ProblemFile":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"problem file is not valid JSON: {e}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: str) -> "ProblemFile":
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    @classmethod
    def from_dict(cls, data: dict) -> "ProblemFile":
        if not isinstance(data, dict):
            raise ParseError("problem file must be a JSON object")
        unknown = [k for k in data if k not in _KEYS]
        if unknown:
            raise ParseError(f"unknown problem fields {unknown}")
        order = [k for k in data]
        _before(order, "monoids", ("base", "target"))
        _before(order, "base", ("lifts", "elements"))
        _before(order, "target", ("pi",))

        out = cls()
        out.primes = PrimeSet(_int_list(data.get("primes", []), "primes"))
        if "N" in data:
            out.N = _int(data["N"], "N")
            if out.N < 1:
                raise ParseError("N must be positive")
        if "truncation" in data:
            out.truncation = TruncationSet(_int_list(data["truncation"], "truncation"))
        for name, spec in _obj(data.get("monoids", {}), "monoids").items():
            out.monoids[name] = _monoid(name, spec)
        if "base" in data:
            out.base = parse_ring(_str(data["base"], "base"), out.primes, out.monoids)
        if "target" in data:
            out.target = parse_ring(_str(data["target"], "target"), out.primes, out.monoids)
        for name, spec in _obj(data.get("monoids", {}), "monoids").items():
            if "realization" in spec:
                if out.target is None:
                    raise ParseError(f"monoid {name} has a realization but no target ring is declared")
                out.monoids[name].realization = {
                    str(k): out.target.parse(_str(v, f"realization of {k}"))
                    for k, v in _obj(spec["realization"], "realization").items()}
        for p, images in _obj(data.get("lifts", {}), "lifts").items():
            try:
                key = int(p)
            except ValueError:
                raise ParseError(f"lift key {p!r} is not a prime") from None
            out.lifts[key] = {str(v): _str(e, f"lift of {v}")
                              for v, e in _obj(images, f"lifts[{p}]").items()}
        out.pi = {str(v): _str(e, f"pi of {v}") for v, e in _obj(data.get("pi", {}), "pi").items()}
        if out.elements or "elements" in data:
            if out.base is None:
                raise ParseError("elements need a base ring")
        for name, text in _obj(data.get("elements", {}), "elements").items():
            out.elements[name] = out.base.parse(_str(text, name), dict(out.elements))
        return out

    # -- derived objects ------------------------------------------------------
    def require_base(self) -> Ring:
        if self.base is None:
            raise NotApplicable("no base ring declared")
        return self.base

    def index_set(self) -> TruncationSet:
        if self.truncation is not None:
            return self.truncation
        if self.N is None:
            raise NotApplicable("neither truncation nor N is declared")
        return TruncationSet.full(self.N)

    def adams_context(self) -> AdamsContext:
        B = self.require_base()
        if isinstance(B, MonoidAlgebra):
            if self.lifts:
                raise NotApplicable("lifts on a monoid algebra are fixed by [r] -> [r^p]")
            return MonoidAdamsContext(B)
        return AdamsContext(B, self.primes, self.lifts)

    def kernel_problem(self) -> KernelProblem:
        if self.N is None:
            raise NotApplicable("kernel problems need N")
        B = self.require_base()
        target = self.target
        if target is None:
            if isinstance(B, MonoidAlgebra) and hasattr(B.monoid, "ring"):
                target = B.monoid.ring
            else:
                raise NotApplicable("no target ring declared")
        return KernelProblem(self.adams_context(), target, self.N, self.pi or None)

    def element(self, text: str, ring: Ring | None = None) -> RingElement:
        """Parse ``text`` over ``ring`` (default: the base), resolving declared names."""
        ring = ring or self.require_base()
        names = self.elements if ring == self.base else {}
        return ring.parse(text, dict(names))


def _before(order: list, first: str, later: tuple) -> None:
    if first not in order:
        return
    i = order.index(first)
    for k in later:
        if k in order and order.index(k) < i:
            raise ParseError(f"{first!r} must be declared before {k!r}")


def _monoid(name: str, spec) -> FiniteMonoidTable:
    spec = _obj(spec, f"monoid {name}")
    unknown = [k for k in spec if k not in _MONOID_KEYS]
    if unknown:
        raise ParseError(f"unknown fields {unknown} in monoid {name}")
    for k in ("elements", "table", "unit"):
        if k not in spec:
            raise ParseError(f"monoid {name} needs {k!r}")
    try:
        return FiniteMonoidTable(spec["elements"], spec["table"], spec["unit"])
    except (ValueError, IndexError, TypeError) as e:
        raise ParseError(f"monoid {name}: {e}") from None


def _obj(v, what: str) -> dict:
    if not isinstance(v, dict):
        raise ParseError(f"{what} must be an object")
    return v


def _str(v, what: str) -> str:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise ParseError(f"{what} must be a string")
    return str(v)


def _int(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{what} must be an integer")
    return v


def _int_list(v, what: str) -> list[int]:
    if not isinstance(v, list):
        raise ParseError(f"{what} must be a list of integers")
    return [_int(x, what) for x in v]
