"""Command-line front end.

Examples::

    fimfp2 nf xxxxxyyy
    fimfp2 eq --alphabet ab aAbB bBaA
    fimfp2 munn x^4y^6x^3 --format ascii
    fimfp2 cayley --size 2 --format dot
    fimfp2 act "x^1 y^2 x^2:x" --by y
    fimfp2 verify all --size 8 --max-weight 12 --report report.json

Exit codes: 0 success (or "equal"), 1 failed verification (or "distinct" with
``--exit-status``), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from . import fim, homology, monogenic, render
from .cayley import EdgeKind, classify_edge, parse_edge, verify_classification
from .report import VerificationReport

REPORT_SCHEMA = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# name -> runner(size, max_weight)
CHECKS: dict[str, Callable[[int, int], VerificationReport]] = {
    "identities": lambda size, kmax: monogenic.verify_identities(kmax),
    "normal-forms": lambda size, kmax: monogenic.verify_normal_forms(size, size + 2),
    "classification": lambda size, kmax: verify_classification(size),
    "basis": lambda size, kmax: homology.verify_basis(size),
    "strong-cycles": lambda size, kmax: homology.verify_strong_cycles(kmax),
    "w0": lambda size, kmax: homology.verify_w0(size),
    "filtration": lambda size, kmax: homology.verify_filtration(kmax),
    "strictness": lambda size, kmax: homology.verify_strictness(kmax),
    "transition-basis": lambda size, kmax: homology.verify_transition_basis(kmax),
    "rank": lambda size, kmax: homology.rank_check(size),
    "chain-complex": lambda size, kmax: homology.verify_chain_complex(size),
}


def _run_check(name: str, size: int, max_weight: int) -> VerificationReport:
    return CHECKS[name](size, max_weight)


def run_checks(names: Sequence[str], size: int, max_weight: int, jobs: int = 1) -> list[VerificationReport]:
    """Run the named checks; results come back in the order of ``names`` regardless of ``jobs``."""
    if jobs <= 1:
        return [_run_check(name, size, max_weight) for name in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_run_check, name, size, max_weight) for name in names]
        return [f.result() for f in futures]


def build_report(reports: Sequence[VerificationReport], size: int, max_weight: int, timings: bool) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "params": {"size": size, "max_weight": max_weight},
        "pass": all(r.passed for r in reports),
        "reports": [r.to_json(timings=timings) for r in reports],
    }


# --- subcommands ---------------------------------------------------------------

def cmd_nf(args: argparse.Namespace) -> int:
    m = monogenic.parse_element(args.word)
    f = monogenic.normal_form(m)
    if args.json:
        print(json.dumps({"normal_form": f.to_json(), "label": monogenic.element_label(m), "interval": m.to_json()}))
        return EXIT_OK
    print(monogenic.element_label(m))
    kind = "I" if isinstance(f, monogenic.TypeI) else "II"
    print(f"interval a={m.a} b={m.b} t={m.t}  type {kind}")
    return EXIT_OK


def cmd_eq(args: argparse.Namespace) -> int:
    if args.alphabet:
        u = fim.parse_word(args.left, args.alphabet)
        v = fim.parse_word(args.right, args.alphabet)
        same = fim.fim_equal(u, v, args.alphabet)
    else:
        u = fim.monogenic_to_general(monogenic.parse_word(args.left))
        v = fim.monogenic_to_general(monogenic.parse_word(args.right))
        same = fim.fim_equal(u, v, "a")
    print("equal" if same else "distinct")
    if args.exit_status and not same:
        return EXIT_FAIL
    return EXIT_OK


def cmd_munn(args: argparse.Namespace) -> int:
    if args.alphabet:
        tree = fim.munn_tree(fim.parse_word(args.word, args.alphabet), args.alphabet)
        if args.format == "ascii":
            print(render.munn_tree_ascii(tree))
        elif args.format == "dot":
            sys.stdout.write(render.munn_tree_dot(tree))
        else:
            print(json.dumps(tree.to_json(), indent=2))
        return EXIT_OK
    m = monogenic.parse_element(args.word)
    if args.format == "ascii":
        print(render.munn_ascii(m))
    elif args.format == "dot":
        sys.stdout.write(render.munn_dot(m))
    else:
        print(json.dumps(render.munn_json(m), indent=2))
    return EXIT_OK


def cmd_cayley(args: argparse.Namespace) -> int:
    if args.size < 0:
        raise ValueError("--size must be non-negative")
    if args.format == "dot":
        sys.stdout.write(render.cayley_dot(args.size))
    elif args.format == "json":
        print(json.dumps(render.cayley_edges_json(args.size), indent=2))
    else:
        print(render.cayley_ascii(args.size))
    return EXIT_OK


def cmd_act(args: argparse.Namespace) -> int:
    e = parse_edge(args.edge)
    if classify_edge(e).kind is EdgeKind.TREE:
        raise ValueError(f"{e.label()} is not a basis edge (it lies in the spanning tree)")
    word = monogenic.parse_word(args.by)
    v = homology.act_word(word, homology.unit(e))
    mw = homology.max_weight(v)
    if args.format == "json":
        print(json.dumps({"edge": e.to_json(), "by": word, "vector": v.to_json(), "max_weight": mw}, indent=2))
        return EXIT_OK
    print(f"b_e  e = {e}  weight {homology.weight(e)}")
    print(f"acting by {monogenic.format_word(word)}")
    for edge, coeff in v.sorted_items():
        print(f"  {coeff:+d}  b[{edge.label()}]  weight {homology.weight(edge)}")
    print(f"max weight: {'none' if mw is None else mw}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = [args.only] if args.only else list(CHECKS)
    reports = run_checks(names, args.size, args.max_weight, args.jobs)
    for r in reports:
        line = r.summary()
        if args.timings:
            line += f" ({r.elapsed_ms} ms)"
        print(line)
    document = build_report(reports, args.size, args.max_weight, args.timings)
    print("ALL PASS" if document["pass"] else "FAILURES PRESENT")
    if args.report:
        text = json.dumps(document, indent=2) + "\n"
        if args.report == "-":
            sys.stdout.write(text)
        else:
            with open(args.report, "w", encoding="utf-8") as fh:
                fh.write(text)
    return EXIT_OK if document["pass"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fimfp2",
        description="Munn-tree arithmetic and homology checks for the free monogenic inverse monoid.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal form of a word over {x, y}")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("eq", help="decide equality of two words")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--alphabet", help="lowercase generators, e.g. 'ab'; default is the monogenic {x, y}")
    p.add_argument("--exit-status", action="store_true", help="exit 1 when the words are distinct")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("munn", help="render the Munn tree of a word")
    p.add_argument("word")
    p.add_argument("--alphabet")
    p.add_argument("--format", choices=["ascii", "dot", "json"], default="ascii")
    p.set_defaults(func=cmd_munn)

    p = sub.add_parser("cayley", help="render a ball of the Cayley digraph")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--format", choices=["ascii", "dot", "json"], default="dot")
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("act", help="act on a basis element of H_1 by a word")
    p.add_argument("edge", help="non-tree arc as '<normal form>:<gen>'")
    p.add_argument("--by", default="", help="word over {x, y}")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("verify", help="run the exhaustive checks")
    p.add_argument("suite", nargs="?", choices=["all"], default="all")
    p.add_argument("--only", choices=list(CHECKS))
    p.add_argument("--size", type=int, default=8)
    p.add_argument("--max-weight", type=int, default=12)
    p.add_argument("--report", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="record wall-clock times (report is then not byte-stable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
