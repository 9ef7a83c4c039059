"""Command-line interface: ``wittring witt|lambda|kernel ...``.

Exit codes: 0 success, 1 precondition failure, 2 integrality violation,
3 disagreement between independent computations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DualPathMismatch, IntegralityError, NotApplicable, WittError
from .kernel import in_kernel_direct, in_kernel_ghost, in_kernel_lambda
from .lambda_ring import dwork_product, psi_mobius
from .problem import _KEYS, ProblemFile
from .rings.extension import embed
from .rings.monoid import MonoidAlgebra, elements_with_support
from .rings.parse import parse_tuple
from .trunc import TruncationSet, s_truncation
from .witt import ghost as ghost_map
from .witt import (GhostVector, WittVector, frobenius, from_ghost, phi_bar, phi_s, pr,
                   teichmuller, verschiebung, witt_add, witt_mul, witt_neg, witt_to_lambda)
from .witt.ghost import phi_s_ghost

EXIT_OK, EXIT_PRECONDITION, EXIT_INTEGRALITY, EXIT_DISAGREEMENT = 0, 1, 2, 3

WITT_OPS = ("add", "mul", "neg", "ghost", "from-ghost", "teichmuller", "frobenius",
            "verschiebung", "phi-s", "phi-bar", "to-lambda")
LAMBDA_OPS = ("adams", "tau", "op", "series", "dwork")


class Disagreement(WittError):
    """Two requested computations gave different answers."""


# -- argument parsing -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Usage errors are precondition failures (exit 1); exit 2 is reserved for integrality."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PRECONDITION, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--problem", help="JSON problem file")
    p.add_argument("--primes", help="comma-separated prime set P, e.g. 2,3")
    p.add_argument("--N", type=int, help="truncation bound N")
    p.add_argument("--ring", help="base ring, e.g. 'ZS[X]' or 'ZS{ZZ/9}'")
    p.add_argument("--target", help="target ring R of pi")
    p.add_argument("--truncation", help="explicit comma-separated index set T")
    p.add_argument("--json", action="store_true", help="emit a JSON record")
    p.add_argument("--check-dual", action="store_true",
                   help="run the independent second computation and compare")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wittring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("witt", help="Witt vector operations")
    w.add_argument("op", choices=WITT_OPS)
    w.add_argument("operands", nargs="*", help="component tuples '(a1, a2, ...)' or elements")
    w.add_argument("--k", type=int, default=1, help="index of F_k / V_k")
    w.add_argument("--ghost", action="store_true", help="operands are ghost vectors")
    w.add_argument("--backend", choices=("ghost", "universal"))
    w.add_argument("--method", choices=("componentwise", "limit", "double_sum"),
                   default="componentwise", help="ghost-side phi_S formula")
    _common(w)

    la = sub.add_parser("lambda", help="Adams operations and lambda-operations")
    la.add_argument("op", choices=LAMBDA_OPS)
    la.add_argument("element", nargs="?")
    la.add_argument("--n", type=int, default=1)
    la.add_argument("--k", type=int, default=1)
    la.add_argument("--method", choices=("wilkerson", "explicit"), default="wilkerson")
    la.add_argument("--prime", type=int, help="odd prime for dwork")
    la.add_argument("--degree", type=int, help="highest power of t for dwork")
    _common(la)

    k = sub.add_parser("kernel", help="membership in the kernel of alpha_{S_N}")
    k.add_argument("element", nargs="?")
    k.add_argument("--method", choices=("lambda", "ghost", "direct", "all"), default="lambda")
    k.add_argument("--exhaustive", action="store_true",
                   help="test every element of a bounded universe instead of one element")
    k.add_argument("--support", type=int, default=3, help="universe: maximal support size")
    k.add_argument("--coeffs", default="-2..2", help="universe: coefficient range lo..hi")
    k.add_argument("--basis", help="universe: basis labels 'a,b,...' or integer range lo..hi")
    _common(k)
    return parser


def _range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise NotApplicable(f"expected a range lo..hi, got {text!r}")
    return list(range(int(lo), int(hi) + 1))


def load_problem(args) -> ProblemFile:
    data: dict = {}
    if args.problem:
        with open(args.problem, encoding="utf-8") as fh:
            text = fh.read()
        ProblemFile.from_text(text)
        data = json.loads(text)
    if args.primes is not None:
        data["primes"] = [int(p) for p in args.primes.split(",") if p.strip()]
    if args.N is not None:
        data["N"] = args.N
    if args.ring is not None:
        data["base"] = args.ring
    if args.target is not None:
        data["target"] = args.target
    if args.truncation is not None:
        data["truncation"] = [int(n) for n in args.truncation.split(",") if n.strip()]
    return ProblemFile.from_dict({key: data[key] for key in _KEYS if key in data})


# -- rendering ------------------------------------------------------------------

def _vector_record(v) -> dict:
    trunc = v.truncation
    entries = v.components if isinstance(v, WittVector) else v.entries
    return {"ring": v.ring.spec(), "truncation": list(trunc),
            "kind": "witt" if isinstance(v, WittVector) else "ghost",
            "components": [str(e) for e in entries]}


def _emit(args, text: str, record: dict) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _agree(label: str, a, b) -> None:
    if a != b:
        raise Disagreement(f"{label}: {a} != {b}")


# -- witt -------------------------------------------------------------------------

def _operands(args, count: int) -> list[str]:
    if len(args.operands) != count:
        raise NotApplicable(f"witt {args.op} takes {count} operand(s), got {len(args.operands)}")
    return args.operands


def _vector(prob: ProblemFile, text: str, T: TruncationSet, as_ghost: bool):
    R = prob.require_base()
    entries = parse_tuple(R, text, dict(prob.elements))
    if len(entries) != len(T):
        raise NotApplicable(f"{text} has {len(entries)} entries, but T = {T} has {len(T)}")
    cls = GhostVector if as_ghost else WittVector
    return cls(R, T, tuple(entries))


def cmd_witt(args, prob: ProblemFile) -> dict:
    op = args.op
    backend = args.backend
    if op == "phi-bar":
        if prob.N is None:
            raise NotApplicable("phi-bar needs N")
        T = s_truncation(prob.primes, prob.N)
    else:
        T = prob.index_set()
    if op in ("add", "mul"):
        a, b = _operands(args, 2)
        u, v = _vector(prob, a, T, False), _vector(prob, b, T, False)
        f = witt_add if op == "add" else witt_mul
        out = f(u, v, backend)
        if args.check_dual and u.ring.torsion_free:
            _agree(f"witt {op} backends", f(u, v, "ghost"), f(u, v, "universal"))
    elif op == "neg":
        out = witt_neg(_vector(prob, _operands(args, 1)[0], T, False), backend)
    elif op == "ghost":
        out = ghost_map(_vector(prob, _operands(args, 1)[0], T, False))
    elif op == "from-ghost":
        out = from_ghost(_vector(prob, _operands(args, 1)[0], T, True))
    elif op == "teichmuller":
        out = teichmuller(prob.element(_operands(args, 1)[0]), T)
    elif op == "frobenius":
        out = frobenius(args.k, _vector(prob, _operands(args, 1)[0], T, args.ghost), backend)
        if args.check_dual and not args.ghost and prob.base.torsion_free and args.k > 1:
            w = _vector(prob, args.operands[0], T, False)
            _agree("frobenius backends", frobenius(args.k, w, "ghost"), frobenius(args.k, w, "universal"))
    elif op == "verschiebung":
        src = _vector(prob, _operands(args, 1)[0], T.divided(args.k), args.ghost)
        out = verschiebung(args.k, src, T)
    elif op == "phi-s":
        w = _vector(prob, _operands(args, 1)[0], T, args.ghost)
        if args.ghost:
            out = phi_s_ghost(w, prob.primes, args.method)
            if args.check_dual:
                for m in ("componentwise", "limit", "double_sum"):
                    _agree(f"phi_S formula {m}", out, phi_s_ghost(w, prob.primes, m))
        else:
            out = phi_s(w, prob.primes, backend)
            if args.check_dual and w.ring.torsion_free:
                _agree("phi_S backends", phi_s(w, prob.primes, "ghost"),
                       phi_s(w, prob.primes, "universal"))
    elif op == "phi-bar":
        w = _vector(prob, _operands(args, 1)[0], T, False)
        out = phi_bar(w, prob.primes, prob.N, backend)
        if args.check_dual:
            _agree("pr o phi_bar", pr(T, out), w)
    elif op == "to-lambda":
        s = witt_to_lambda(_vector(prob, _operands(args, 1)[0], T, False))
        record = {"op": op, "ring": s.ring.spec(), "precision": s.precision,
                  "coefficients": ["1"] + [str(c) for c in s.coefficients]}
        return {"text": str(s), "record": record}
    else:  # pragma: no cover - argparse restricts the choices
        raise NotApplicable(op)
    record = {"op": op, **_vector_record(out)}
    return {"text": str(out), "record": record}


# -- lambda ---------------------------------------------------------------------

def cmd_lambda(args, prob: ProblemFile) -> dict:
    op = args.op
    if op == "dwork":
        if args.prime is None or args.degree is None:
            raise NotApplicable("dwork needs --prime and --degree")
        N = args.degree + 1
        res = dwork_product(args.prime, N, witt_precision=min(N, 20) if args.check_dual else None)
        coeffs = [str(res.F[i]) for i in range(N)]
        text = "[" + ", ".join(coeffs) + "]"
        return {"text": text, "record": {"op": op, "prime": args.prime, "degree": args.degree,
                                         "ring": res.F.ring.spec(), "coefficients": coeffs}}
    if args.element is None:
        raise NotApplicable(f"lambda {op} needs an element")
    ctx = prob.adams_context()
    x = prob.element(args.element)
    if op == "adams":
        out = ctx.adams(args.n, x)
        if args.check_dual:
            if prob.N is not None and args.n < prob.N:
                N = prob.N
            else:
                N = args.n + 1
            _agree(f"psi^{args.n} vs tau resummation", embed(out, ctx.extension),
                   psi_mobius(ctx, x, N)[args.n - 1])
        text, extra = str(out), {"n": args.n}
    elif op == "tau":
        out = ctx.tau(args.k, x)
        text, extra = str(out), {"k": args.k}
    elif op == "op":
        if args.method == "explicit":
            out = ctx.lambda_explicit(args.n, x)
        else:
            out = ctx.lambda_wilkerson(args.n, x)
        if args.check_dual and args.n >= 1:
            other = ctx.lambda_wilkerson(args.n, x) if args.method == "explicit" \
                else ctx.lambda_explicit(args.n, x)
            if other != out:
                raise DualPathMismatch(f"lambda^{args.n}({x}): {out} != {other}")
        text, extra = str(out), {"n": args.n}
    elif op == "series":
        if prob.N is None:
            raise NotApplicable("lambda series needs N")
        s = ctx.lambda_series(x, prob.N, check=args.check_dual)
        coeffs = ["1"] + [str(c) for c in s.coefficients]
        return {"text": str(s), "record": {"op": op, "ring": s.ring.spec(),
                                           "precision": s.precision, "coefficients": coeffs}}
    else:  # pragma: no cover
        raise NotApplicable(op)
    return {"text": text, "record": {"op": op, "ring": out.ring.spec(), "value": text, **extra}}


# -- kernel -------------------------------------------------------------------------

def _kernel_tests(method: str, kp) -> list:
    if method == "all":
        tests = [("lambda", in_kernel_lambda), ("direct", in_kernel_direct)]
        if isinstance(kp.base, MonoidAlgebra) and not any(
                kp.target.has_torsion(nu) for nu in kp.truncation):
            tests.append(("ghost", in_kernel_ghost))
        return tests
    return [(method, {"lambda": in_kernel_lambda, "ghost": in_kernel_ghost,
                      "direct": in_kernel_direct}[method])]


def _result_record(res) -> dict:
    rec = {"member": res.member}
    if res.witness is not None:
        rec["witness"] = {"n": res.witness[0], "value": str(res.witness[1])}
    return rec


def cmd_kernel(args, prob: ProblemFile) -> dict:
    kp = prob.kernel_problem()
    tests = _kernel_tests(args.method, kp)
    if args.exhaustive:
        return _kernel_exhaustive(args, kp, tests)
    if args.element is None:
        raise NotApplicable("kernel needs an element (or --exhaustive)")
    x = prob.element(args.element)
    results = [(name, f(x, kp)) for name, f in tests]
    if len(results) == 1:
        res = results[0][1]
        return {"text": str(res), "record": {"method": args.method, **_result_record(res)}}
    lines = [f"{name}: {res}" for name, res in results]
    record = {"method": "all", "results": {name: _result_record(r) for name, r in results}}
    verdicts = {r.member for _, r in results}
    if len(verdicts) > 1:
        return {"text": "\n".join(lines), "record": record,
                "disagreement": f"kernel tests disagree on {x}"}
    lines.append(f"member: {str(verdicts.pop()).lower()}")
    return {"text": "\n".join(lines), "record": record}


def _kernel_exhaustive(args, kp, tests) -> dict:
    B = kp.base
    if not isinstance(B, MonoidAlgebra):
        raise NotApplicable("exhaustive universes are enumerated over B = Z_S R")
    M = B.monoid
    if args.basis:
        if ".." in args.basis and not args.basis.startswith("["):
            labels = [str(i) for i in _range(args.basis)]
        else:
            labels = [s.strip() for s in args.basis.split(",")]
        basis = [M.parse(s) for s in labels]
    elif M.is_finite:
        basis = M.elements()
    else:
        raise NotApplicable("the monoid is infinite; give --basis")
    count = members = 0
    first = None
    for x in elements_with_support(B, basis, _range(args.coeffs), args.support):
        verdicts = {f(x, kp).member for _, f in tests}
        count += 1
        if len(verdicts) > 1:
            first = first or str(x)
            continue
        members += verdicts.pop()
    text = (f"universe: {count} elements, members: {members}, "
            f"methods: {','.join(n for n, _ in tests)}, disagreements: {0 if first is None else 'yes'}")
    record = {"universe": count, "members": members, "methods": [n for n, _ in tests],
              "disagreement": first}
    out = {"text": text, "record": record}
    if first is not None:
        out["disagreement"] = f"kernel tests disagree on {first}"
    return out


# -- entry point ------------------------------------------------------------------

def _parse(parser: argparse.ArgumentParser, argv):
    args, extra = parser.parse_known_args(argv)
    # positionals given after options arrive here
    for e in extra:
        if e.startswith("--"):
            parser.error(f"unrecognized arguments: {e}")
    if args.command == "witt":
        args.operands = list(args.operands) + extra
    elif extra:
        if args.element is not None or len(extra) > 1:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        args.element = extra[0]
    return args


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = _parse(parser, argv)
    except SystemExit as e:  # usage errors and --help
        return e.code if isinstance(e.code, int) else EXIT_PRECONDITION
    try:
        prob = load_problem(args)
        handler = {"witt": cmd_witt, "lambda": cmd_lambda, "kernel": cmd_kernel}[args.command]
        out = handler(args, prob)
    except Disagreement as e:
        print(f"disagreement: {e}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except DualPathMismatch as e:
        print(f"disagreement: {e}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except IntegralityError as e:
        print(f"integrality violation: {e}", file=sys.stderr)
        return EXIT_INTEGRALITY
    except (WittError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(args, out["text"], out["record"])
    if "disagreement" in out:
        print(f"disagreement: {out['disagreement']}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
