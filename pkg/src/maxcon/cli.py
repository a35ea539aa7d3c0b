"""Command-line entry point: ``maxcon <command> ...``.

Exit codes: 0 success, 1 parse error, 2 validation or hypothesis failure,
3 internal contradiction (a proved statement failed at runtime).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import cuts, oracle
from .degseq import DegreeSequence, edmonds_feasible, is_graphic, realize
from .errors import MaxconError, ParseError, TheoremContradiction, ValidationError
from .factors import (
    FactorDecomposition,
    FactorRequest,
    kundu_realize,
    maxcon_with_factor,
    peel_complement_case,
    peel_one_factors,
    verify_decomposition,
)
from .formats import format_edge_list, read_graph, to_graph6, write_graph
from .graph import Graph
from .rewire import Mode, RewireProblem, audit, rewire

SCHEMA = 1


def read_sequences(arg: str) -> list[DegreeSequence]:
    """A comma-separated sequence, or a file with one sequence per line."""
    path = Path(arg)
    if not path.is_file():
        return [DegreeSequence.parse(arg)]
    out = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        if line.strip() and not line.lstrip().startswith("#"):
            try:
                out.append(DegreeSequence.parse(line))
            except ParseError as exc:
                raise ParseError(str(exc).split(": ", 1)[-1], lineno, exc.column) from None
    return out


def read_sequence(arg: str) -> DegreeSequence:
    seqs = read_sequences(arg)
    if len(seqs) != 1:
        raise ValidationError(f"expected exactly one sequence, found {len(seqs)}")
    return seqs[0]


def parse_kappa(arg: str) -> tuple[int, ...]:
    # kappa follows the caller's vertex order, so keep it unsorted
    seq = DegreeSequence.parse(arg)
    return seq.degrees


def _edges(g: Graph) -> list[list[int]]:
    return [list(e) for e in g.edges()]


def _emit(payload: dict, out: str | None = None) -> None:
    text = json.dumps(payload, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _decomposition_payload(args, dec: FactorDecomposition, pi, kappa) -> dict:
    report = verify_decomposition(dec, pi, kappa)
    if not report.ok:
        raise TheoremContradiction("decomposition audit failed: " + "; ".join(report.violations))
    lam = cuts.lambda_of(dec.g) if dec.g.n >= 2 else 0
    return {
        "schema": SCHEMA,
        "command": args.command,
        "seed": args.seed,
        "decomposition": dec.to_dict(),
        "audit": {"violations": report.violations, "lambda": lam, "delta": dec.g.min_degree()},
    }


def cmd_check(args) -> int:
    for seq in read_sequences(args.seq):
        if not is_graphic(seq):
            print("graphic: no")
            continue
        k = args.k if args.k is not None else min(seq.terms, default=0)
        verdict = "yes" if k >= 1 and edmonds_feasible(seq, k) else "no"
        print(f"graphic: yes; k-edge-connected realization: {verdict}")
    return 0


def cmd_realize(args) -> int:
    g = realize(read_sequence(args.seq))
    if args.output:
        write_graph(g, args.output)
    else:
        sys.stdout.write(to_graph6(g) + "\n" if args.format == "g6" else format_edge_list(g))
    return 0


def cmd_rewire(args) -> int:
    g0 = read_graph(args.graph)
    f = read_graph(args.protected) if args.protected else None
    z0 = read_graph(args.sacrificial) if args.sacrificial else None
    problem = RewireProblem(g0, f, z0, Mode(args.mode))
    g, cert = rewire(problem)
    # recompute the certificate from the emitted graph alone
    check = audit(problem, g, cert.trace)
    if check.to_dict() != cert.to_dict():
        raise TheoremContradiction(f"certificate mismatch: {cert} vs {check}")
    if args.output:
        write_graph(g, args.output)
    _emit(
        {
            "schema": SCHEMA,
            "command": "rewire",
            "seed": args.seed,
            "mode": problem.mode.value,
            "graph": {"n": g.n, "edges": _edges(g)},
            "certificate": check.to_dict(),
            "trace": [m.as_list() for m in cert.trace],
        }
    )
    return 0


def cmd_kundu(args) -> int:
    pi, kappa = read_sequence(args.seq), parse_kappa(args.kappa)
    g, factor = kundu_realize(FactorRequest(pi, kappa), seed=args.seed)
    _emit(_decomposition_payload(args, FactorDecomposition(g, factor), pi, kappa))
    return 0


def cmd_maxcon_factor(args) -> int:
    pi, kappa = read_sequence(args.seq), parse_kappa(args.kappa)
    g, factor, cert = maxcon_with_factor(FactorRequest(pi, kappa), seed=args.seed)
    payload = _decomposition_payload(args, FactorDecomposition(g, factor), pi, kappa)
    if payload["audit"]["lambda"] != payload["audit"]["delta"]:
        raise TheoremContradiction("output is not maximally edge-connected")
    payload["certificate"] = cert.to_dict()
    _emit(payload)
    return 0


def cmd_peel(args) -> int:
    pi = read_sequence(args.seq)
    fn = peel_complement_case if args.complement else peel_one_factors
    dec = fn(pi, args.k, args.r, seed=args.seed)
    _emit(_decomposition_payload(args, dec, pi, args.k))
    return 0


def cmd_oracle(args) -> int:
    report = oracle.check_theorem(args.theorem, max_n=args.max_n, samples=args.samples, seed=args.seed)
    text = report.to_jsonl()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 3 if report.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxcon", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log search progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
        p.set_defaults(func=fn)
        return p

    p = add("check", cmd_check, "graphicality and k-edge-connected feasibility")
    p.add_argument("seq", help="comma-separated sequence or a file with one per line")
    p.add_argument("-k", type=int, help="target edge-connectivity (default: smallest term)")

    p = add("realize", cmd_realize, "Havel-Hakimi realization")
    p.add_argument("seq")
    p.add_argument("--format", choices=("el", "g6"), default="el")
    p.add_argument("-o", "--output", help="write the graph here (.g6 suffix selects graph6)")

    p = add("rewire", cmd_rewire, "rewire a realization to maximal edge-connectivity")
    p.add_argument("-g", "--graph", required=True, help="starting realization G0")
    p.add_argument("-f", "--protected", help="protected subgraph F (default empty)")
    p.add_argument("-z", "--sacrificial", help="sacrificial subgraph Z0 (default G0 - E(F))")
    p.add_argument("--mode", choices=[m.value for m in Mode], default="full")
    p.add_argument("-o", "--output", help="also write the output graph here")

    p = add("kundu", cmd_kundu, "realization with a prescribed (k, k+1)-factor")
    p.add_argument("seq")
    p.add_argument("kappa", help="factor degrees in the same vertex order as SEQ")

    p = add("maxcon-factor", cmd_maxcon_factor, "maximally edge-connected realization with a factor")
    p.add_argument("seq")
    p.add_argument("kappa")

    p = add("peel", cmd_peel, "k-factor with r+1 edge-disjoint perfect matchings")
    p.add_argument("seq")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--complement", action="store_true", help="use the complement-case construction")

    p = add("oracle", cmd_oracle, "brute-force checker sweep, JSON Lines output")
    p.add_argument("--theorem", required=True, choices=sorted(oracle.CHECKERS))
    p.add_argument("--max-n", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("-o", "--output")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except TheoremContradiction as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return 3
    except (MaxconError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
