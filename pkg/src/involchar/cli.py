"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 resource limit, 4 internal
invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, characters, graphs, partitions, permutations
from .counting import count_decompositions
from .errors import ContractError, InvariantViolation, ParseError, ResourceLimitError

EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_INVARIANT = 4

FORMATS = ("text", "csv", "json", "bfile")


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker processes for table/survey evaluation (default: all cores)")
    p.add_argument("--max-n", type=int, default=None, help="override the size limit of the command")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="involchar",
        description="Involution factorizations and symmetric-group characters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="N(mu) from the closed formula")
    p.add_argument("--mu", required=True)

    p = sub.add_parser("decompose", parents=[common], help="factor a permutation into two involutions")
    p.add_argument("--perm", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print every (sigma, tau) pair as JSON")

    p = sub.add_parser("char", parents=[common], help="a single character value")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = sub.add_parser("table", parents=[common], help="character table of S_n with the N(mu) row")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("survey", parents=[common], help="compare N(mu) with absolute column sums")
    p.add_argument("--n", required=True, help="a degree such as 8, or a range such as 8-16")

    p = sub.add_parser("seq", parents=[common], help="row-sum sequences")
    p.add_argument("--kind", choices=analysis.SEQUENCE_KINDS, required=True)
    p.add_argument("--n-max", type=int, required=True)
    return parser


def _limit(args, default):
    return default if args.max_n is None else args.max_n


def _n_range(text: str):
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ParseError(f"bad degree or range {text!r}") from None
    if lo < 1 or hi < lo:
        raise ParseError(f"bad degree or range {text!r}")
    return range(lo, hi + 1)


def cmd_count(args, out):
    mu = partitions.parse_partition(args.mu)
    value = count_decompositions(mu)
    if args.format == "json":
        out.write(json.dumps({"mu": list(mu), "count": value}) + "\n")
    elif args.format == "csv":
        out.write(f"mu,count\n\"{mu}\",{value}\n")
    else:
        out.write(f"{value}\n")


def cmd_decompose(args, out):
    rho = permutations.parse_cycles(args.perm, args.n)
    mu = rho.cycle_type()
    expected = count_decompositions(mu)
    if not args.list:
        if args.format == "json":
            out.write(json.dumps({"perm": permutations.format_cycles(rho), "n": rho.n,
                                  "cycle_type": list(mu), "count": expected}) + "\n")
        else:
            out.write(f"{expected}\n")
        return
    graphs_found = list(graphs.enumerate_decompositions(rho, max_n=_limit(args, graphs.MAX_DECOMPOSITION_N)))
    if len(graphs_found) != expected:
        raise InvariantViolation(f"brute force found {len(graphs_found)} decompositions, formula gives {expected}")
    out.write(f"{len(graphs_found)}\n")
    for g in graphs_found:
        out.write(json.dumps(g.to_json()) + "\n")


def cmd_char(args, out):
    lam = partitions.parse_partition(args.lam)
    mu = partitions.parse_partition(args.mu)
    value = characters.mn_character(lam, mu)
    if args.format == "json":
        out.write(json.dumps({"lambda": list(lam), "mu": list(mu), "value": value}) + "\n")
    else:
        out.write(f"{value}\n")


def cmd_table(args, out):
    table = characters.char_table(args.n, threads=args.threads, max_n=_limit(args, characters.MAX_TABLE_N))
    extra = [("N(mu)", [count_decompositions(mu) for mu in table.contents])]
    if args.format == "csv":
        out.write(table.to_csv(extra))
    elif args.format == "json":
        out.write(table.to_json([("N", extra[0][1])]) + "\n")
    else:
        out.write(table.to_text(extra))


def cmd_survey(args, out):
    limit = _limit(args, analysis.MAX_SURVEY_N)
    results = [analysis.survey(n, threads=args.threads, max_n=limit) for n in _n_range(args.n)]
    if args.format == "json":
        doc = [json.loads(analysis.survey_to_json(rows, s)) for rows, s in results]
        out.write(json.dumps(doc[0] if len(doc) == 1 else doc) + "\n")
    elif args.format == "csv":
        if len(results) == 1:
            out.write(analysis.survey_to_csv(results[0][0]))
        else:
            out.write(analysis.summaries_to_csv([s for _, s in results]))
    else:
        for rows, s in results:
            out.write(f"n={s.n}\n")
            for r in rows:
                if r.diff:
                    flag = "  NEGATIVE" if r.diff < 0 else ""
                    out.write(f"  {r.mu.exponent_form():<16} N={r.n_mu} abs_sum={r.abs_sum} diff={r.diff}{flag}\n")
            out.write(f"  discrepancies={s.discrepancies} agreements={s.agreements} "
                      f"known_agreements={s.known_agreements} partitions={s.partitions}\n")


def cmd_seq(args, out):
    values = analysis.row_sum_sequence(args.kind, args.n_max, threads=args.threads,
                                       max_n=_limit(args, analysis.MAX_SURVEY_N))
    if args.format == "bfile":
        out.write(analysis.to_bfile(values))
    elif args.format == "json":
        out.write(json.dumps({"kind": args.kind, "values": values}) + "\n")
    elif args.format == "csv":
        out.write("n,value\n" + "".join(f"{i},{v}\n" for i, v in enumerate(values, 1)))
    else:
        out.write(", ".join(map(str, values)) + "\n")


COMMANDS = {
    "count": cmd_count,
    "decompose": cmd_decompose,
    "char": cmd_char,
    "table": cmd_table,
    "survey": cmd_survey,
    "seq": cmd_seq,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.format == "bfile" and args.command != "seq":
            raise UsageError("--format bfile is only valid for the seq command")
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        COMMANDS[args.command](args, out)
    except (ParseError, ContractError, UsageError) as exc:
        err.write(f"error: {_one_line(exc)}\n")
        return EXIT_INPUT
    except ResourceLimitError as exc:
        err.write(f"resource limit: {_one_line(exc)}\n")
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        err.write(f"internal invariant violated: {_one_line(exc)}\n")
        return EXIT_INVARIANT
    return 0


def _one_line(exc) -> str:
    return " ".join(str(exc).split())


if __name__ == "__main__":
    sys.exit(main())
