"""Command-line interface.

Subcommands::

    classify   --h 3,3,4,4 [--degree] [--format json|csv|text] [--verbose]
    survey     --n 6 [--degree] [--format json|csv|text]
    witness    --h ...        construction trace, conditions, chain
    degree     --h ... [--mu d1,d2,...]
    render     --h ...        staircase as text
    transpose  --h ...

``--out FILE`` writes the main output to a file instead of stdout and
``--figure FILE`` additionally renders a matplotlib figure next to it
(the staircase for single functions, a summary chart for surveys).
The environment variable ``HESS_N_CAP`` overrides the enumeration cap.

Exit codes: 0 on success, 2 for invalid input, 3 for a broken internal
invariant.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import hessfn, report, schubert, symgrp, weightlat, witness
from .errors import InputError, InternalError


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(out).write_text(
            text if text.endswith("\n") else text + "\n",
            encoding="utf-8",
            newline="\n",
        )


def _save_staircase(h, path: str) -> None:
    from . import figures

    figures.save_figure(figures.staircase_figure(h), path)


def _format_trace(trace) -> str:
    lines = ["construction trace:"]
    for record in trace:
        if record.data is None:
            lines.append(f"  n={record.n}: case {record.case}")
        else:
            d = record.data
            lines.append(
                f"  n={record.n}: case {record.case}"
                f"  [a={d.a} b={d.b} r={d.r} m={d.m} q={d.q} M={d.M}]"
            )
    return "\n".join(lines)


def _cmd_classify(args) -> int:
    h = hessfn.from_text(args.h)
    rep = report.classify_one(h, compute_degree=args.degree)
    text = report.export([rep], args.format)
    if args.verbose and args.format == "text" and rep.nef:
        text += "\n" + _format_trace(witness.construct_witness(h).case_trace)
    _write_output(text, args.out)
    if args.figure:
        _save_staircase(h, args.figure)
    return 0


def _cmd_survey(args) -> int:
    reports = report.survey(args.n, compute_degree=args.degree)
    _write_output(report.export(reports, args.format), args.out)
    if args.figure:
        from . import figures

        figures.save_figure(figures.survey_figure(reports), args.figure)
    return 0


def _cmd_witness(args) -> int:
    h = hessfn.from_text(args.h)
    rep = witness.construct_witness(h)
    u, chain = witness.bigness_certificate(h)
    lines = [
        f"u: {symgrp.to_text(rep.u)}",
        f"in block subgroup: {'yes' if rep.in_block_subgroup else 'no'}",
        "conditions: "
        + " ".join(
            f"({tag})={'ok' if flag else 'FAIL'}"
            for tag, flag in zip(("i", "ii", "iii", "iv"), rep.conditions)
        ),
        _format_trace(rep.case_trace),
        f"chain ({len(chain) - 1} covers):",
    ]
    lines.extend("  " + symgrp.to_text(x) for x in chain)
    _write_output("\n".join(lines), args.out)
    return 0


def _cmd_degree(args) -> int:
    h = hessfn.from_text(args.h)
    mu = weightlat.weight_from_text(args.mu) if args.mu else None
    _write_output(str(schubert.hessenberg_degree(h, mu)), args.out)
    return 0


def _cmd_render(args) -> int:
    h = hessfn.from_text(args.h)
    _write_output(hessfn.render_staircase(h), args.out)
    if args.figure:
        _save_staircase(h, args.figure)
    return 0


def _cmd_transpose(args) -> int:
    h = hessfn.from_text(args.h)
    _write_output(hessfn.to_text(hessfn.transpose(h)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hessfano",
        description="Fano / weak Fano classification of Hessenberg functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_h=True):
        if with_h:
            p.add_argument("--h", required=True, help="comma-separated values, e.g. 3,3,4,4")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("classify", help="classify one Hessenberg function")
    add_common(p)
    p.add_argument("--degree", action="store_true", help="also compute the exact degree")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--verbose", action="store_true", help="show the construction trace")
    p.add_argument("--figure", help="also save the staircase diagram to this file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("survey", help="classify every connected function for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--degree", action="store_true", help="also compute exact degrees")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--figure", help="also save a classification chart to this file")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("witness", help="construct and certify the bigness witness")
    add_common(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("degree", help="exact degree of a dominant weight")
    add_common(p)
    p.add_argument("--mu", help="weight coefficients d1,d2,...; default: anti-canonical")
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("render", help="print the staircase diagram")
    add_common(p)
    p.add_argument("--figure", help="also save the diagram to this file")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("transpose", help="print the transposed function")
    add_common(p)
    p.set_defaults(func=_cmd_transpose)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
