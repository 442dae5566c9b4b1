"""Deterministic text and tab-separated renderings of sweep reports.

Timing is deliberately left out so identical runs produce identical bytes.
"""

from __future__ import annotations

from fractions import Fraction

from ..kernel_columns import COLUMNS

FORMATS = ("text", "tsv")


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _ratios(report) -> str:
    return " ".join(f"{fraction_str(q)}:{n}" for q, n in report.ratio_counts.items()) or "-"


def _class(report) -> str:
    return "not-nilpotent" if report.nilpotency_class is None else str(report.nilpotency_class)


def render_text(reports) -> str:
    lines = ["# nilorder verification report"]
    total = 0
    for rep in reports:
        total += len(rep.violations)
        lines += [
            "",
            f"[group {rep.group}]",
            f"order: {rep.order}",
            f"class: {_class(rep)}",
            f"mode: {rep.mode}",
            f"pairs: {rep.pairs_checked}",
            f"checks: {','.join(rep.checks)}",
            f"violations: {len(rep.violations)}",
            f"ratios: {_ratios(rep)}",
        ]
        lines += [f"note: {n}" for n in rep.notes]
        for v in rep.violations:
            data = " ".join(f"{c}={x}" for c, x in zip(COLUMNS, v.row))
            lines.append(f"violation: check={v.check} a=@{v.a} b=@{v.b} {data} :: {v.message}")
    lines += [
        "",
        "[summary]",
        f"groups: {len(reports)}",
        f"pairs: {sum(r.pairs_checked for r in reports)}",
        f"violations: {total}",
        f"status: {'PASS' if total == 0 else 'FAIL'}",
    ]
    return "\n".join(lines) + "\n"


def render_tsv(reports) -> str:
    head = ["group", "order", "class", "mode", "pairs", "checks", "violations", "ratios"]
    lines = ["\t".join(head)]
    for rep in reports:
        lines.append("\t".join([
            rep.group, str(rep.order), _class(rep), rep.mode, str(rep.pairs_checked),
            ",".join(rep.checks), str(len(rep.violations)), _ratios(rep),
        ]))
    vrows = [(rep, v) for rep in reports for v in rep.violations]
    if vrows:
        lines.append("")
        lines.append("\t".join(["group", "check", "a", "b", *COLUMNS, "message"]))
        for rep, v in vrows:
            lines.append("\t".join([rep.group, v.check, str(v.a), str(v.b),
                                    *(str(x) for x in v.row), v.message]))
    return "\n".join(lines) + "\n"


def render(reports, fmt="text") -> str:
    if fmt == "text":
        return render_text(reports)
    if fmt == "tsv":
        return render_tsv(reports)
    raise ValueError(f"unknown report format {fmt!r}")
