"""Fuzzy stage analysis of grouped assessment data.

    fuzzystages analyze GROUP_FILE
    fuzzystages compare GROUP_FILE GROUP_FILE...
    fuzzystages combine GROUP_FILE GROUP_FILE...

Exit codes: 0 success, 2 validation error, 3 degenerate data.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .datasets import STRUCTURED, TABULAR, load_group_file
from .errors import DegenerateError, ValidationError
from .render import FORMATS, render_report
from .report import AnalysisOptions, analyze_command, combine_command, compare_command

EXIT_OK, EXIT_VALIDATION, EXIT_DEGENERATE = 0, 2, 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="text", choices=sorted(FORMATS), help="output format")
    common.add_argument("--precision", type=int, default=3, help="decimals in text output (default 3)")
    common.add_argument("--exact", action="store_true", help="print exact rationals in text output")
    common.add_argument("--normalizer", type=int, default=None, help="Shannon entropy normalizer (default L**k)")
    common.add_argument("--stages", default=None, help="stage-name preset (e.g. mm) or comma separated names")
    common.add_argument("--epsilon", type=float, default=1e-9, help="tolerance for equal centroid coordinates")
    common.add_argument("--input-format", choices=(STRUCTURED, TABULAR), default=None,
                        help="override format detection (.csv/.tsv are tabular, anything else structured)")
    common.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")

    parser = argparse.ArgumentParser(prog="fuzzystages", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", parents=[common], help="analyze one group")
    p.add_argument("file")
    p = sub.add_parser("compare", parents=[common], help="analyze and compare two or more groups")
    p.add_argument("files", nargs="+")
    p = sub.add_parser("combine", parents=[common], help="pseudo-frequency view of two or more groups")
    p.add_argument("files", nargs="+")
    p.add_argument("--measures", action="store_true", help="also report scalar measures for the combined view")
    return parser


def run(argv: list[str] | None = None) -> bytes:
    args = build_parser().parse_args(argv)
    if args.precision < 0:
        raise ValidationError("--precision must be >= 0")
    options = AnalysisOptions(
        normalizer=args.normalizer, epsilon=args.epsilon, measures=getattr(args, "measures", False)
    )
    files = [args.file] if args.command == "analyze" else args.files
    datasets = [load_group_file(f, args.input_format, stage_names=args.stages) for f in files]
    if args.command == "analyze":
        report = analyze_command(datasets[0], options)
    elif args.command == "compare":
        report = compare_command(datasets, options)
    else:
        report = combine_command(datasets, options)
    out = render_report(report, args.format, args.precision, args.exact)
    if args.output:
        Path(args.output).write_bytes(out)
        return b""
    return out


def main(argv: list[str] | None = None) -> int:
    try:
        out = run(argv)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DegenerateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
