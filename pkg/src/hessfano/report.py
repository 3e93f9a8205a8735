"""Per-function classification reports and their serialization.

A report bundles everything the classifiers and the witness machinery say
about one Hessenberg function.  Serialization is deterministic in all
three formats; JSON keeps integers as numbers except the degree, which is
written as a decimal string because flag-variety degrees overflow doubles
quickly.
"""
from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass

from . import hessfn, schubert, symgrp, weightlat, witness
from .errors import InputError, InternalError
from .hessfn import DEFAULT_ENUMERATION_CAP, HessFn

CSV_HEADER = (
    "n",
    "h",
    "h_star",
    "dim",
    "xi",
    "nef",
    "fano",
    "fano_by_shape",
    "weak_fano",
    "w_h",
    "blocks",
    "witness_u",
    "witness_conditions",
    "degree",
    "degree_positive",
)

ENUMERATION_CAP_ENV = "HESS_N_CAP"


@dataclass(frozen=True)
class ClassReport:
    """All per-function verdicts; witness and degree fields are optional.

    ``witness_u`` and ``witness_conditions`` are present exactly when the
    function is nef; ``degree`` and ``degree_positive`` additionally
    require the degree to have been requested.
    """

    n: int
    h: tuple[int, ...]
    h_star: tuple[int, ...]
    dim: int
    xi: tuple[int, ...]
    nef: bool
    fano: bool
    fano_by_shape: bool
    weak_fano: bool
    w_h: tuple[int, ...]
    blocks: tuple[tuple[int, int], ...]
    witness_u: tuple[int, ...] | None = None
    witness_conditions: tuple[bool, bool, bool, bool] | None = None
    degree: int | None = None
    degree_positive: bool | None = None


def classify_one(h: HessFn, compute_degree: bool = False) -> ClassReport:
    """Fully populate a report for one connected Hessenberg function."""
    verdict = weightlat.classify(h)
    weight = weightlat.anticanonical_weight(h)
    blocks = weightlat.parabolic_blocks(weight)

    witness_u = witness_conditions = None
    if verdict.nef:
        rep = witness.construct_witness(h)
        witness_u = rep.u
        witness_conditions = rep.conditions

    degree = degree_positive = None
    if compute_degree and verdict.nef:
        degree = schubert.hessenberg_degree(h)
        degree_positive = degree > 0

    return ClassReport(
        n=h.n,
        h=h.values,
        h_star=hessfn.transpose(h).values,
        dim=hessfn.dimension(h),
        xi=weight,
        nef=verdict.nef,
        fano=verdict.fano,
        fano_by_shape=verdict.fano_by_shape,
        weak_fano=verdict.weak_fano,
        w_h=hessfn.pivot_permutation(h),
        blocks=blocks.intervals,
        witness_u=witness_u,
        witness_conditions=witness_conditions,
        degree=degree,
        degree_positive=degree_positive,
    )


def enumeration_cap() -> int:
    """The enumeration cap, overridable through the environment."""
    raw = os.environ.get(ENUMERATION_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"{ENUMERATION_CAP_ENV}={raw!r} is not an integer") from exc


def survey(
    n: int, compute_degree: bool = False, cap: int | None = None
) -> list[ClassReport]:
    """Classify every connected Hessenberg function on [n], lexicographic."""
    if cap is None:
        cap = enumeration_cap()
    return [
        classify_one(h, compute_degree) for h in hessfn.enumerate_all(n, cap=cap)
    ]


def summary_counts(reports: list[ClassReport]) -> dict[str, int]:
    return {
        "total": len(reports),
        "nef": sum(1 for r in reports if r.nef),
        "fano": sum(1 for r in reports if r.fano),
    }


def _check_consistency(report: ClassReport) -> None:
    """Theorem-level facts the library must never contradict."""
    if report.fano and not report.nef:
        raise InternalError(f"report for {report.h}: fano without nef")
    if report.weak_fano != report.nef:
        raise InternalError(f"report for {report.h}: weak_fano differs from nef")
    if report.fano != report.fano_by_shape:
        raise InternalError(f"report for {report.h}: fano differs from banded shape test")


def export(reports: list[ClassReport], fmt: str = "text") -> str:
    """Serialize reports to one of ``json``, ``csv`` or ``text``."""
    for report in reports:
        _check_consistency(report)
    if fmt == "json":
        return _export_json(reports)
    if fmt == "csv":
        return _export_csv(reports)
    if fmt == "text":
        return _export_text(reports)
    raise InputError(f"unknown format {fmt!r}")


def _ints(text_values: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text_values.replace(",", " ").split())


def _report_to_dict(report: ClassReport) -> dict:
    out: dict = {
        "n": report.n,
        "h": hessfn.to_text(HessFn(report.h)),
        "h_star": ",".join(str(v) for v in report.h_star),
        "dim": report.dim,
        "xi": weightlat.weight_to_text(report.xi),
        "nef": report.nef,
        "fano": report.fano,
        "fano_by_shape": report.fano_by_shape,
        "weak_fano": report.weak_fano,
        "w_h": symgrp.to_text(report.w_h),
        "blocks": [list(interval) for interval in report.blocks],
    }
    if report.witness_u is not None:
        out["witness_u"] = symgrp.to_text(report.witness_u)
        out["witness_conditions"] = list(report.witness_conditions)
    if report.degree is not None:
        out["degree"] = str(report.degree)
        out["degree_positive"] = report.degree_positive
    return out


def _export_json(reports: list[ClassReport]) -> str:
    common_n = reports[0].n if reports and len({r.n for r in reports}) == 1 else None
    payload = {"n": common_n, "reports": [_report_to_dict(r) for r in reports]}
    return json.dumps(payload, separators=(",", ":"))


def reports_from_json(text: str) -> list[ClassReport]:
    """Parse :func:`export`'s JSON back into reports (round-trip exact)."""
    payload = json.loads(text)
    out = []
    for item in payload["reports"]:
        out.append(
            ClassReport(
                n=item["n"],
                h=_ints(item["h"]),
                h_star=_ints(item["h_star"]),
                dim=item["dim"],
                xi=_ints(item["xi"]),
                nef=item["nef"],
                fano=item["fano"],
                fano_by_shape=item["fano_by_shape"],
                weak_fano=item["weak_fano"],
                w_h=_ints(item["w_h"]),
                blocks=tuple(tuple(pair) for pair in item["blocks"]),
                witness_u=_ints(item["witness_u"]) if "witness_u" in item else None,
                witness_conditions=(
                    tuple(item["witness_conditions"])
                    if "witness_conditions" in item
                    else None
                ),
                degree=int(item["degree"]) if "degree" in item else None,
                degree_positive=item.get("degree_positive"),
            )
        )
    return out


def _bool_cell(value: bool | None) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def _export_csv(reports: list[ClassReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n", quoting=csv.QUOTE_NONNUMERIC)
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow(
            [
                r.n,
                " ".join(str(v) for v in r.h),
                " ".join(str(v) for v in r.h_star),
                r.dim,
                " ".join(str(v) for v in r.xi),
                _bool_cell(r.nef),
                _bool_cell(r.fano),
                _bool_cell(r.fano_by_shape),
                _bool_cell(r.weak_fano),
                " ".join(str(v) for v in r.w_h),
                " ".join(f"{a}-{b}" for a, b in r.blocks),
                " ".join(str(v) for v in r.witness_u) if r.witness_u else "",
                " ".join(_bool_cell(c) for c in r.witness_conditions)
                if r.witness_conditions
                else "",
                str(r.degree) if r.degree is not None else "",
                _bool_cell(r.degree_positive),
            ]
        )
    return buffer.getvalue()


def _export_text(reports: list[ClassReport]) -> str:
    columns = ("h", "dim", "xi", "nef", "fano", "weak_fano", "w_h", "witness_u", "degree")
    rows = [columns]
    for r in reports:
        rows.append(
            (
                ",".join(str(v) for v in r.h),
                str(r.dim),
                ",".join(str(v) for v in r.xi),
                _bool_cell(r.nef),
                _bool_cell(r.fano),
                _bool_cell(r.weak_fano),
                " ".join(str(v) for v in r.w_h),
                " ".join(str(v) for v in r.witness_u) if r.witness_u else "-",
                str(r.degree) if r.degree is not None else "-",
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(columns))]
    lines = [
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in rows
    ]
    counts = summary_counts(reports)
    lines.append(f"total={counts['total']} nef={counts['nef']} fano={counts['fano']}")
    return "\n".join(lines)
