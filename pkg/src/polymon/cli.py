"""polymon command line: evaluate expressions and expose every operation.

Exit status: 0 success (including a collapse search that finds nothing),
1 domain error, 2 syntax/usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from .core import Alphabet, make_alphabet, one, render_word
from .errors import ExpressionSyntaxError, PolymonError
from .green import act, ball, cayley_dot, rclass_key, solve_axb
from .parsing import parse, parse_positive_word, evaluate
from .rewriting import collapse_witness
from .topology import (
    CofiniteNbhd,
    certify_translations,
    cofinite,
    joint_discontinuity_family,
    shrink_neighborhood,
)


class UsageError(Exception):
    """Malformed invocation below argparse's radar; exits 2."""


def _lambda_arg(text: str):
    if text.lower() in ("inf", "infinite"):
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"lambda must be an integer or 'inf', got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lambda", dest="lam", type=_lambda_arg, default=2,
                        help="alphabet size, an integer >= 2 or 'inf' (default 2)")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed the RNG; reserved for randomized sweeps")

    parser = argparse.ArgumentParser(prog="polymon",
                                     description="Exact computation in polycyclic inverse monoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression to its normal form")
    p.add_argument("expr")

    p = sub.add_parser("solve", parents=[common], help="all x with A*x*B = C")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")

    p = sub.add_parser("downset", parents=[common], help="prefixes of a nonzero element")
    p.add_argument("expr")

    p = sub.add_parser("rclass", parents=[common], help="canonical representative of the R-class")
    p.add_argument("expr")

    p = sub.add_parser("ball", parents=[common], help="enumerate the radius-N ball")
    p.add_argument("radius", type=int)

    p = sub.add_parser("act", parents=[common], help="apply an element to a stack word")
    p.add_argument("expr")
    p.add_argument("word")

    p = sub.add_parser("continuity", parents=[common],
                       help="shrink a neighborhood of Zero through both translations by A")
    p.add_argument("a")
    p.add_argument("--exclude", default="",
                   help="comma-separated expressions excluded by the target neighborhood")
    p.add_argument("--radius", type=int, default=6,
                   help="ball radius for certificate verification (default 6)")

    p = sub.add_parser("witness", parents=[common],
                       help="joint-discontinuity pairs for a target: witness [C] K")
    p.add_argument("args", nargs="+", metavar="[C] K")

    p = sub.add_parser("collapse", parents=[common],
                       help="derive (0, 1) from identifying A with B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--depth", type=int, default=8, help="search depth budget (default 8)")

    p = sub.add_parser("export-dot", parents=[common], help="right-Cayley ball as DOT")
    p.add_argument("radius", type=int)
    p.add_argument("file")

    sub.add_parser("repl", parents=[common], help="read-evaluate-print loop on stdin")
    return parser


def _eval(text: str, alphabet: Alphabet):
    return evaluate(parse(text, alphabet), alphabet)


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj))
    else:
        print(text)


def _element_list(args, elems) -> None:
    _emit(args, ", ".join(str(e) for e in elems), [e.to_json() for e in elems])


def _run(args, alphabet: Alphabet) -> int:
    cmd = args.command
    if cmd == "eval":
        x = _eval(args.expr, alphabet)
        _emit(args, str(x), x.to_json())
    elif cmd == "solve":
        sols = solve_axb(_eval(args.a, alphabet), _eval(args.b, alphabet), _eval(args.c, alphabet))
        _element_list(args, sols)
    elif cmd == "downset":
        _element_list(args, _eval(args.expr, alphabet).downset())
    elif cmd == "rclass":
        rep = rclass_key(_eval(args.expr, alphabet)).representative(alphabet)
        _emit(args, str(rep), rep.to_json())
    elif cmd == "ball":
        b = ball(alphabet, args.radius)
        _emit(args, "\n".join(str(e) for e in b), [e.to_json() for e in b])
    elif cmd == "act":
        result = act(_eval(args.expr, alphabet), parse_positive_word(args.word, alphabet))
        if result is None:
            _emit(args, "undefined", {"undefined": True})
        else:
            _emit(args, render_word(result), {"word": list(result)})
    elif cmd == "continuity":
        return _continuity(args, alphabet)
    elif cmd == "witness":
        return _witness(args, alphabet)
    elif cmd == "collapse":
        return _collapse(args, alphabet)
    elif cmd == "export-dot":
        return _export_dot(args, alphabet)
    elif cmd == "repl":
        return _repl(args, alphabet)
    return 0


def _continuity(args, alphabet: Alphabet) -> int:
    a = _eval(args.a, alphabet)
    items = [s for s in (piece.strip() for piece in args.exclude.split(",")) if s]
    target = cofinite(alphabet, [_eval(s, alphabet) for s in items])
    shrunk = shrink_neighborhood(a, target)
    bad = certify_translations(a, target, shrunk, args.radius)
    trivial = a.is_zero

    def fmt(nbhd: CofiniteNbhd) -> str:
        members = nbhd.excluded_sorted()
        return ", ".join(str(e) for e in members) if members else "none"

    text = "\n".join([
        f"translation: {a}",
        f"excluded input: {fmt(target)}",
        f"excluded output: {fmt(shrunk)}",
        f"verified radius: {args.radius}",
        "counterexamples: " + (", ".join(f"{x} ({side}: {prod})" for x, side, prod in bad) if bad else "none"),
        f"trivial: {'yes' if trivial else 'no'}",
    ])
    obj = {
        "translation": a.to_json(),
        "excluded_input": target.to_json()["excluded"],
        "excluded_output": shrunk.to_json()["excluded"],
        "verified_radius": args.radius,
        "counterexamples": [
            {"x": x.to_json(), "side": side, "product": prod.to_json()} for x, side, prod in bad
        ],
        "trivial": trivial,
    }
    _emit(args, text, obj)
    return 0


def _witness(args, alphabet: Alphabet) -> int:
    if len(args.args) == 1:
        c, k_text = one(alphabet), args.args[0]
    elif len(args.args) == 2:
        c, k_text = _eval(args.args[0], alphabet), args.args[1]
    else:
        raise UsageError("witness takes an optional target and a count: witness [C] K")
    try:
        k = int(k_text)
    except ValueError:
        raise UsageError(f"K must be an integer, got {k_text!r}")
    family = joint_discontinuity_family(c, k)
    text = "\n".join(f"{a} {b}" for a, b in family.pairs)
    _emit(args, text, family.to_json())
    return 0


def _collapse(args, alphabet: Alphabet) -> int:
    derivation = collapse_witness(_eval(args.a, alphabet), _eval(args.b, alphabet), args.depth)
    if derivation is None:
        _emit(args, f"not found within depth {args.depth}", {"found": False, "max_depth": args.depth})
        return 0
    lines = []
    for step in derivation.steps:
        head = step.rule
        if step.by is not None:
            head += f" {step.by}"
        if step.sources is not None:
            head += " {},{}".format(*step.sources)
        lines.append(f"{head}: {step.pair[0]} ~ {step.pair[1]}")
    _emit(args, "\n".join(lines),
          {"found": True, "depth": derivation.depth, "steps": derivation.to_json()["steps"]})
    return 0


def _export_dot(args, alphabet: Alphabet) -> int:
    dot = cayley_dot(ball(alphabet, args.radius))
    with open(args.file, "w") as fh:
        fh.write(dot)
    lines = dot.splitlines()
    n_edges = sum(1 for l in lines if "->" in l)
    n_nodes = sum(1 for l in lines if "label=" in l and "->" not in l)
    _emit(args, f"wrote {args.file}: {n_nodes} nodes, {n_edges} edges",
          {"file": args.file, "nodes": n_nodes, "edges": n_edges})
    return 0


def _repl(args, alphabet: Alphabet) -> int:
    prompt = "> " if sys.stdin.isatty() else ""
    while True:
        try:
            line = input(prompt)
        except EOFError:
            return 0
        line = line.strip()
        if line in ("quit", "exit"):
            return 0
        if not line:
            continue
        try:
            x = _eval(line, alphabet)
            if args.format == "json":
                print(json.dumps(x.to_json()))
            else:
                print(x)
        except PolymonError as err:
            print(f"error: {err}", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        alphabet = make_alphabet(args.lam)
        return _run(args, alphabet)
    except ExpressionSyntaxError as err:
        print(f"syntax error: {err}", file=sys.stderr)
        return 2
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except (PolymonError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
