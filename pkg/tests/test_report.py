import re
from fractions import Fraction as F

import pytest

from fuzzystages import (
    AnalysisOptions,
    DegenerateError,
    GroupDataset,
    ShapeError,
    analyze_command,
    combine_command,
    compare_command,
    parse_report,
    render_report,
)
from fuzzystages.classroom import published_memberships
from fuzzystages.render import format_number, render_text
from fuzzystages.report import REPORT_VERSION


def test_analyze_engineering(engineering):
    g = analyze_command(engineering).groups[0]
    assert g.uncertainty.shannon == pytest.approx(0.3230074185550448, abs=1e-12)
    assert g.uncertainty.total == pytest.approx(2.957925774803575, abs=1e-12)
    assert tuple(g.stages[0].centroid) == (F(13, 4), F(3, 16))
    assert len(g.profiles) == 15
    assert sum(row.probability for row in g.profiles) == 1


def test_analyze_management(engineering, management):
    g1 = analyze_command(engineering).groups[0]
    g2 = analyze_command(management).groups[0]
    assert g2.uncertainty == g1.uncertainty
    assert [tuple(s.centroid) for s in g2.stages] == [
        (F(5, 2), F(3, 16)), (F(7, 4), F(3, 16)), (F(3, 2), F(1, 6))
    ]


def test_analyze_zero_stage_names_it():
    ds = GroupDataset.from_counts("g", 30, [("S1", (0, 0, 30, 0, 0)), ("Flat", (6, 6, 6, 6, 6))])
    with pytest.raises(DegenerateError, match="Flat"):
        analyze_command(ds)


def test_analyze_no_well_ordered_mass():
    ds = GroupDataset.from_counts("g", 10, [("S1", (10, 0, 0, 0, 0)), ("S2", (0, 0, 0, 0, 10))])
    with pytest.raises(DegenerateError, match="well-ordered"):
        analyze_command(ds)


def test_normalizer_option(engineering):
    g = analyze_command(engineering, AnalysisOptions(normalizer=35)).groups[0]
    assert g.normalizer == 35
    assert g.uncertainty.shannon > 0.3230074185550448


def test_compare(engineering, management):
    report = compare_command([engineering, management])
    row = next(r for r in report.combined.rows if r.profile == (2, 2, 0))
    assert row.frequency == F(1, 8) and row.possibility == 1
    assert row.memberships == (F(1, 16), F(1, 16))
    assert [v.verdict for v in report.comparisons] == ["first-better", "first-better", "tie"]
    assert report.combined.uncertainty is None


def test_compare_with_itself_ties(engineering):
    report = compare_command([engineering, engineering])
    assert {v.verdict for v in report.comparisons} == {"tie"}


def test_compare_shape_error(engineering):
    two = GroupDataset.from_counts("two", 35, [(n, c.counts) for n, c in engineering.stages[:2]])
    with pytest.raises(ShapeError):
        compare_command([engineering, two])


def test_combine(engineering, management):
    report = combine_command([engineering, management])
    assert report.kind == "combine" and not report.comparisons
    assert report.combined.uncertainty is None
    with_measures = combine_command([engineering, management], AnalysisOptions(measures=True))
    u = with_measures.combined.uncertainty
    assert u.total == pytest.approx(u.strife + u.nonspecificity)
    assert 0 <= u.shannon <= 1


@pytest.mark.parametrize(
    "x, precision, exact, expected",
    [
        (F(1, 16), 3, False, "0.062"),
        (F(1, 64), 3, False, "0.016"),
        (F(1, 32), 3, False, "0.031"),
        (F(2, 15), 3, False, "0.133"),
        (F(0), 3, False, "0.000"),
        (F(17, 6), 2, False, "2.83"),
        (F(17, 6), 3, True, "17/6"),
        (0.3962406251802892, 4, False, "0.3962"),
        (7, 1, False, "7.0"),
    ],
)
def test_format_number(x, precision, exact, expected):
    assert format_number(x, precision, exact) == expected


def test_text_report_reproduces_published_column(engineering):
    text = render_text(analyze_command(engineering), reference=published_memberships())
    rows = [line for line in text.splitlines() if line.startswith("(")]
    assert len(rows) == 15
    flagged = [line for line in rows if line.endswith("*")]
    assert len(flagged) == 1 and flagged[0].startswith("(c, c, b)")
    for line in rows:
        if not line.endswith("*"):
            cells = line.split()
            assert cells[3] == cells[6]  # m column equals the published column


def test_text_report_flags_both_errata_rows(engineering, management):
    text = render_text(compare_command([engineering, management]), reference=published_memberships())
    assert [line.split(")")[0] + ")" for line in text.splitlines() if line.endswith("*")] == ["(c, c, b)"] * 2


def test_text_precision_and_exact(engineering):
    report = analyze_command(engineering)
    assert "0.39624" in render_text(report, precision=5)
    assert "17/6" in render_text(report, exact=True)


def test_combine_text_shows_only_combined_view(engineering, management):
    text = render_report(combine_command([engineering, management])).decode()
    assert text.startswith("combined groups: engineering, management")
    assert "strife" not in text


@pytest.mark.parametrize("kind", ["analyze", "compare", "combine"])
def test_structured_round_trip(kind, engineering, management):
    if kind == "analyze":
        report = analyze_command(engineering)
    elif kind == "compare":
        report = compare_command([engineering, management])
    else:
        report = combine_command([engineering, management], AnalysisOptions(measures=True))
    data = render_report(report, "json")
    assert b'"version": "report-v1"' in data and REPORT_VERSION == "report-v1"
    assert parse_report(data) == report
    assert render_report(parse_report(data), "json") == data


def test_output_is_deterministic(engineering, management):
    for fmt in ("text", "json", "svg"):
        a = render_report(compare_command([engineering, management]), fmt)
        b = render_report(compare_command([engineering, management]), fmt)
        assert a == b


@pytest.mark.parametrize("groups", [1, 2])
def test_svg_has_one_drawing_per_stage_plus_scatter(groups, engineering, management):
    datasets = [engineering, management][:groups]
    report = analyze_command(engineering) if groups == 1 else compare_command(datasets)
    svg = render_report(report, "svg").decode()
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert len(re.findall(r'<g class="drawing', svg)) == 3 + 1
    assert svg.count('class="drawing stage-chart"') == 3
    for tag in ("Fw", "Fm", "Fi"):
        assert f">{tag}</text>" in svg


def test_svg_is_well_formed(engineering, management):
    import xml.etree.ElementTree as ET

    ET.fromstring(render_report(compare_command([engineering, management]), "svg"))
