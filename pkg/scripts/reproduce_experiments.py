"""Rerun the two classroom groups and set recomputed values beside the published ones.

    python3 scripts/reproduce_experiments.py [--precision 3] [--out DIR]

Prints a summary table and, with ``--out``, writes the flagged text report,
the structured report and the SVG drawing for the two-group comparison.
"""

import argparse
from pathlib import Path

from fuzzystages import (
    compare_command,
    nonspecificity,
    render_report,
    shannon_entropy,
    strife,
)
from fuzzystages.classroom import (
    DERIVED_XC,
    ENGINEERING,
    ERRATA,
    MANAGEMENT,
    PUBLISHED_MEASURES,
    PUBLISHED_ORDERED_POSSIBILITY,
    PUBLISHED_VERDICTS,
    PUBLISHED_XC,
    published_memberships,
    table_column,
)
from fuzzystages.render import format_number, render_text
from fuzzystages.uncertainty import OrderedPossibilityDistribution

COLUMNS = {"engineering": "m1", "management": "m2"}


def measure_rows(report, precision):
    rows = []
    for group in report.groups:
        name = group.name
        published = PUBLISHED_MEASURES[name]
        r = OrderedPossibilityDistribution(PUBLISHED_ORDERED_POSSIBILITY[name])
        from_printed = {
            "strife": strife(r),
            "nonspecificity": nonspecificity(r),
            "total": strife(r) + nonspecificity(r),
            "shannon": shannon_entropy(table_column(COLUMNS[name]), 125),
        }
        recomputed = {
            "strife": group.uncertainty.strife,
            "nonspecificity": group.uncertainty.nonspecificity,
            "total": group.uncertainty.total,
            "shannon": group.uncertainty.shannon,
        }
        for key in published:
            rows.append((name, key, published[key], from_printed[key], recomputed[key]))
    fmt = lambda x: format_number(x, precision)  # noqa: E731
    lines = [f"{'group':<12} {'measure':<15} {'published':>10} {'printed in':>10} {'raw data':>10}"]
    for name, key, pub, printed, raw in rows:
        lines.append(f"{name:<12} {key:<15} {fmt(pub):>10} {fmt(printed):>10} {fmt(raw):>10}")
    return lines


def centroid_rows(report):
    lines = [f"{'group':<12} {'stage':<28} {'published xc':>13} {'recomputed':>11}"]
    for group in report.groups:
        for stage, pub, derived in zip(group.stages, PUBLISHED_XC[group.name], DERIVED_XC[group.name]):
            assert stage.centroid.xc == derived
            lines.append(f"{group.name:<12} {stage.name:<28} {pub or '-':>13} {str(derived):>11}")
    return lines


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--precision", type=int, default=3)
    parser.add_argument("--out", type=Path, help="directory for the rendered reports")
    args = parser.parse_args(argv)

    report = compare_command([ENGINEERING, MANAGEMENT])
    print("uncertainty (published | from the printed distributions | from raw data)")
    print("\n".join(measure_rows(report, args.precision)))
    print()
    print("centre-of-mass abscissae")
    print("\n".join(centroid_rows(report)))
    print()
    verdicts = tuple(v.verdict for v in report.comparisons)
    print(f"stage verdicts {verdicts} (published {PUBLISHED_VERDICTS})")
    print()
    print(f"{len(ERRATA)} known discrepancies:")
    for e in ERRATA:
        print(f"  {e.where}: {e.published} -> {e.derived} ({e.note})")

    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
        text = render_text(report, args.precision, reference=published_memberships())
        (args.out / "classroom.txt").write_text(text)
        (args.out / "classroom.json").write_bytes(render_report(report, "json"))
        (args.out / "classroom.svg").write_bytes(render_report(report, "svg"))
        print(f"\nreports written to {args.out}")


if __name__ == "__main__":
    main()
