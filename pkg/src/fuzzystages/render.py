"""Report serialization: aligned text, versioned JSON, and SVG charts.

In JSON every exact rational is written as a ``"p/q"`` string and every float
as a JSON number, so :func:`parse_report` restores an equal report.
"""

from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction
from typing import Mapping, Sequence
from xml.sax.saxutils import escape

from .centroid import CentroidPoint, feasible_points
from .core import as_fraction
from .errors import ValidationError
from .profiles import Profile
from .report import (
    REPORT_VERSION,
    AnalysisReport,
    CombinedAnalysis,
    CombinedRow,
    GroupAnalysis,
    ProfileRow,
    StageAnalysis,
    StageVerdict,
)
from .uncertainty import UncertaintyReport

FORMATS = {"text": "text", "json": "json", "json-like": "json", "structured": "json",
           "svg": "svg", "svg-like": "svg", "vector": "svg"}


def format_number(x, precision: int = 3, exact: bool = False) -> str:
    if isinstance(x, int) and not isinstance(x, bool):
        x = Fraction(x)
    if exact:
        return str(x) if isinstance(x, Fraction) else repr(x)
    if isinstance(x, Fraction):
        # round half to even on the exact value; the result has a finite decimal expansion
        r = round(x, precision)
        d = Decimal(r.numerator) / Decimal(r.denominator)
        return str(d.quantize(Decimal(1).scaleb(-precision)))
    return f"{x:.{precision}f}"


# ---------------------------------------------------------------- structured


def _num(x):
    if isinstance(x, Fraction):
        return str(x)
    return x


def _unnum(x):
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    return x


def _profile_out(profile: Profile, labels: Sequence[str]) -> list[str]:
    return [labels[i] for i in profile]


def _profile_in(names: Sequence[str], labels: Sequence[str]) -> Profile:
    try:
        return tuple(labels.index(n) for n in names)
    except ValueError:
        raise ValidationError(f"profile {names!r} uses an unknown label") from None


def _uncertainty_out(u: UncertaintyReport | None):
    if u is None:
        return None
    return {"strife": u.strife, "nonspecificity": u.nonspecificity, "total": u.total, "shannon": u.shannon}


def _uncertainty_in(doc) -> UncertaintyReport | None:
    if doc is None:
        return None
    return UncertaintyReport(doc["strife"], doc["nonspecificity"], doc["total"], doc["shannon"])


def report_to_dict(report: AnalysisReport) -> dict:
    labels = report.labels

    def group(g: GroupAnalysis) -> dict:
        return {
            "name": g.name,
            "size": g.size,
            "normalizer": g.normalizer,
            "stages": [
                {
                    "name": s.name,
                    "counts": list(s.counts),
                    "grades": [_num(x) for x in s.grades],
                    "normalized": [_num(x) for x in s.normalized],
                    "centroid": {"xc": _num(s.centroid.xc), "yc": _num(s.centroid.yc)},
                }
                for s in g.stages
            ],
            "profiles": [
                {
                    "profile": _profile_out(row.profile, labels),
                    "membership": _num(row.membership),
                    "probability": _num(row.probability),
                    "possibility": _num(row.possibility),
                }
                for row in g.profiles
            ],
            "uncertainty": _uncertainty_out(g.uncertainty),
        }

    combined = None
    if report.combined is not None:
        c = report.combined
        combined = {
            "groups": list(c.groups),
            "rows": [
                {
                    "profile": _profile_out(row.profile, labels),
                    "memberships": [_num(x) for x in row.memberships],
                    "frequency": _num(row.frequency),
                    "probability": _num(row.probability),
                    "possibility": _num(row.possibility),
                }
                for row in c.rows
            ],
            "uncertainty": _uncertainty_out(c.uncertainty),
        }
    return {
        "version": report.version,
        "kind": report.kind,
        "labels": list(labels),
        "epsilon": report.epsilon,
        "groups": [group(g) for g in report.groups],
        "combined": combined,
        "comparisons": [
            {"stage": v.stage, "first": v.first, "second": v.second, "verdict": v.verdict, "rule": v.rule}
            for v in report.comparisons
        ],
    }


def report_from_dict(doc: Mapping) -> AnalysisReport:
    if doc.get("version") != REPORT_VERSION:
        raise ValidationError(f"unsupported report version {doc.get('version')!r}")
    labels = tuple(doc["labels"])

    def group(g) -> GroupAnalysis:
        stages = tuple(
            StageAnalysis(
                s["name"],
                tuple(s["counts"]),
                tuple(_unnum(x) for x in s["grades"]),
                tuple(_unnum(x) for x in s["normalized"]),
                CentroidPoint(_unnum(s["centroid"]["xc"]), _unnum(s["centroid"]["yc"])),
            )
            for s in g["stages"]
        )
        rows = tuple(
            ProfileRow(
                _profile_in(r["profile"], labels),
                _unnum(r["membership"]),
                _unnum(r["probability"]),
                _unnum(r["possibility"]),
            )
            for r in g["profiles"]
        )
        return GroupAnalysis(g["name"], g["size"], stages, rows, _uncertainty_in(g["uncertainty"]), g["normalizer"])

    combined = None
    if doc.get("combined") is not None:
        c = doc["combined"]
        combined = CombinedAnalysis(
            tuple(c["groups"]),
            tuple(
                CombinedRow(
                    _profile_in(r["profile"], labels),
                    tuple(_unnum(x) for x in r["memberships"]),
                    _unnum(r["frequency"]),
                    _unnum(r["probability"]),
                    _unnum(r["possibility"]),
                )
                for r in c["rows"]
            ),
            _uncertainty_in(c.get("uncertainty")),
        )
    return AnalysisReport(
        doc["kind"],
        labels,
        tuple(group(g) for g in doc["groups"]),
        combined,
        tuple(StageVerdict(**v) for v in doc.get("comparisons", [])),
        epsilon=doc.get("epsilon", 1e-9),
    )


def render_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def parse_report(data: bytes | str) -> AnalysisReport:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed report: {exc}") from None
    return report_from_dict(doc)


# ---------------------------------------------------------------- text


def _table(header: Sequence[str], rows: Sequence[Sequence[str]], left: int = 1) -> list[str]:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]

    def line(cells):
        out = [c.ljust(w) if i < left else c.rjust(w) for i, (c, w) in enumerate(zip(cells, widths))]
        return "  ".join(out).rstrip()

    return [line(header), line(["-" * w for w in widths])] + [line(r) for r in rows]


def _profile_name(profile: Profile, labels: Sequence[str]) -> str:
    return "(" + ", ".join(labels[i] for i in profile) + ")"


def _group_text(
    g: GroupAnalysis,
    labels: Sequence[str],
    fmt,
    reference: Mapping[Profile, object] | None,
) -> list[str]:
    lines = [f"group {g.name} (n = {g.size})", ""]
    header = ["stage", *labels, "xc", "yc"]
    rows = [[s.name, *(fmt(x) for x in s.grades), fmt(s.centroid.xc), fmt(s.centroid.yc)] for s in g.stages]
    lines += _table(header, rows)
    lines.append("")

    by_profile = {row.profile: row for row in g.profiles}
    profiles = set(by_profile)
    if reference is not None:
        profiles |= {s for s, v in reference.items() if as_fraction(v)}
    header = ["profile", "m", "p", "r"]
    if reference is not None:
        header += ["published", ""]
    rows = []
    flagged = 0
    for s in sorted(profiles):
        row = by_profile.get(s)
        cells = [_profile_name(s, labels)] + (
            [fmt(row.membership), fmt(row.probability), fmt(row.possibility)] if row else [fmt(0)] * 3
        )
        if reference is not None:
            published = as_fraction(reference.get(s, 0))
            mismatch = fmt(published) != cells[1]
            flagged += mismatch
            cells += [fmt(published), "*" if mismatch else ""]
        rows.append(cells)
    lines += _table(header, rows)
    if reference is not None:
        lines.append(f"* {flagged} row(s) differ from the published column")
    u = g.uncertainty
    lines += [
        "",
        f"strife           {fmt(u.strife)}",
        f"non-specificity  {fmt(u.nonspecificity)}",
        f"total            {fmt(u.total)}",
        f"shannon          {fmt(u.shannon)}  (normalizer {g.normalizer})",
        "",
    ]
    return lines


def _combined_text(c: CombinedAnalysis, labels: Sequence[str], fmt) -> list[str]:
    lines = ["combined groups: " + ", ".join(c.groups), ""]
    header = ["profile", *(f"m({name})" for name in c.groups), "f", "p", "r"]
    rows = [
        [_profile_name(r.profile, labels), *(fmt(m) for m in r.memberships), fmt(r.frequency),
         fmt(r.probability), fmt(r.possibility)]
        for r in c.rows
    ]
    lines += _table(header, rows)
    if c.uncertainty is not None:
        u = c.uncertainty
        lines += [
            "",
            f"strife           {fmt(u.strife)}",
            f"non-specificity  {fmt(u.nonspecificity)}",
            f"total            {fmt(u.total)}",
            f"shannon          {fmt(u.shannon)}",
        ]
    lines.append("")
    return lines


def render_text(
    report: AnalysisReport,
    precision: int = 3,
    exact: bool = False,
    reference: Mapping[str, Mapping[Profile, object]] | None = None,
) -> str:
    """Aligned plain-text tables.

    ``reference`` maps a group name to published membership values per
    profile; rows whose rendered value differs are flagged with ``*``.
    """

    def fmt(x):
        return format_number(x, precision, exact)

    labels = report.labels
    lines: list[str] = []
    if report.kind != "combine":
        for g in report.groups:
            lines += _group_text(g, labels, fmt, (reference or {}).get(g.name))
    if report.combined is not None:
        lines += _combined_text(report.combined, labels, fmt)
    if report.comparisons:
        lines += ["per-stage centroid comparison", ""]
        lines += _table(
            ["stage", "first", "second", "verdict", "rule"],
            [[v.stage, v.first, v.second, v.verdict, v.rule] for v in report.comparisons],
            left=5,
        )
        lines.append("")
    return "\n".join(lines)


# ---------------------------------------------------------------- svg

_COLORS = ("#4269d0", "#efb118", "#ff725c", "#6cc5b0", "#3ca951", "#ff8ab7", "#a463f2", "#97bbf5")
_PANEL_W, _PANEL_H, _PAD = 360, 220, 36


def _stage_chart(index: int, stage_name: str, stages: Sequence[StageAnalysis], names: Sequence[str],
                 labels: Sequence[str], top: float) -> list[str]:
    L = len(labels)
    plot_w, plot_h = _PANEL_W - 2 * _PAD, _PANEL_H - 2 * _PAD
    unit = plot_w / L
    ymax = max(1.0, max(float(max(s.normalized)) for s in stages))

    def sx(x):
        return _PAD + x * unit

    def sy(y):
        return top + _PAD + plot_h * (1 - y / ymax)

    out = [f'<g class="drawing stage-chart" data-stage="{index + 1}">',
           f'<text x="{_PAD}" y="{top + 20:.1f}" font-size="13">{escape(stage_name)}</text>',
           f'<line x1="{sx(0):.1f}" y1="{sy(0):.1f}" x2="{sx(L):.1f}" y2="{sy(0):.1f}" stroke="black"/>',
           f'<line x1="{sx(0):.1f}" y1="{sy(0):.1f}" x2="{sx(0):.1f}" y2="{sy(ymax):.1f}" stroke="black"/>']
    bar_w = unit / (len(stages) + 1)
    for j, (s, group) in enumerate(zip(stages, names)):
        color = _COLORS[j % len(_COLORS)]
        for i, y in enumerate(s.normalized):
            x0 = sx(i) + bar_w * (j + 0.5)
            out.append(
                f'<rect x="{x0:.1f}" y="{sy(float(y)):.1f}" width="{bar_w:.1f}" '
                f'height="{sy(0) - sy(float(y)):.1f}" fill="{color}"><title>{escape(group)} {escape(labels[i])}: '
                f'{float(y):.3f}</title></rect>'
            )
        cx = sx(float(s.centroid.xc))
        out.append(f'<path d="M{cx:.1f},{sy(0) + 2:.1f} l-5,9 h10 z" fill="{color}"/>')
    for i, name in enumerate(labels):
        out.append(f'<text x="{sx(i + 0.5):.1f}" y="{sy(0) + 24:.1f}" font-size="11" '
                   f'text-anchor="middle">{escape(name)}</text>')
    out.append("</g>")
    return out


def _scatter(report: AnalysisReport, top: float) -> list[str]:
    L = len(report.labels)
    plot_w, plot_h = _PANEL_W - 2 * _PAD, _PANEL_H - 2 * _PAD

    def sx(x):
        return _PAD + plot_w * float(x) / L

    def sy(y):
        return top + _PAD + plot_h * (1 - float(y) / 0.5)

    pts = feasible_points(L)
    w, m, i = pts["worst"], pts["uniform"], pts["ideal"]
    out = ['<g class="drawing centroid-scatter">',
           f'<text x="{_PAD}" y="{top + 20:.1f}" font-size="13">centres of mass</text>',
           f'<polygon points="{sx(w.xc):.1f},{sy(w.yc):.1f} {sx(m.xc):.1f},{sy(m.yc):.1f} '
           f'{sx(i.xc):.1f},{sy(i.yc):.1f}" fill="none" stroke="#888" stroke-dasharray="4 3"/>']
    for tag, p in (("Fw", w), ("Fm", m), ("Fi", i)):
        out.append(f'<text x="{sx(p.xc):.1f}" y="{sy(p.yc) - 6:.1f}" font-size="11" '
                   f'text-anchor="middle">{tag}</text>')
    for j, g in enumerate(report.groups):
        color = _COLORS[j % len(_COLORS)]
        for k, s in enumerate(g.stages):
            out.append(f'<circle cx="{sx(s.centroid.xc):.1f}" cy="{sy(s.centroid.yc):.1f}" r="4" fill="{color}">'
                       f'<title>{escape(g.name)} stage {k + 1}</title></circle>')
    out.append("</g>")
    return out


def render_svg(report: AnalysisReport) -> str:
    """One bar chart per stage plus a centroid scatter over the feasible triangle."""
    names = [g.name for g in report.groups]
    k = len(report.groups[0].stages) if report.groups else 0
    body: list[str] = []
    for idx in range(k):
        stages = [g.stages[idx] for g in report.groups]
        body += _stage_chart(idx, stages[0].name, stages, names, report.labels, idx * _PANEL_H)
    body += _scatter(report, k * _PANEL_H)
    height = (k + 1) * _PANEL_H
    legend = [f'<text x="{_PANEL_W - _PAD}" y="{14 + 14 * j}" font-size="11" text-anchor="end" '
              f'fill="{_COLORS[j % len(_COLORS)]}">{escape(n)}</text>' for j, n in enumerate(names)]
    return "\n".join(
        [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_PANEL_W}" height="{height}" '
         f'viewBox="0 0 {_PANEL_W} {height}">', *legend, *body, "</svg>", ""]
    )


def render_report(
    report: AnalysisReport,
    fmt: str = "text",
    precision: int = 3,
    exact: bool = False,
    reference: Mapping[str, Mapping[Profile, object]] | None = None,
) -> bytes:
    try:
        kind = FORMATS[fmt]
    except KeyError:
        raise ValidationError(f"unknown output format {fmt!r}; choose from {sorted(FORMATS)}") from None
    if kind == "json":
        out = render_json(report)
    elif kind == "svg":
        out = render_svg(report)
    else:
        out = render_text(report, precision, exact, reference)
    return out.encode("utf-8")
