"""Command-line front end: encode values, classify patterns, sweep, report.

Exit status is 0 on success and 2 for every usage or input-domain problem;
diagnostics go to stderr, data to stdout.  All randomness flows from
--seed, so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .encoding import codeword_to_text, encode, get_scheme
from .experiments import (
    format_csv_row,
    export_csv,
    mean_errors,
    optimal_ratio,
    parse_csv,
    render_map,
    run_experiment,
    sweep,
)
from .patterns import generate_box, generate_spiral, load_pattern

_BUILTIN_PATTERNS = {"spiral": generate_spiral, "box": generate_box}
_RATIO_BAND = (0.20, 0.30)


def _parse_int_list(text: str, flag: str) -> list[int]:
    items = [part for part in text.split(",") if part.strip()]
    if not items:
        raise ValueError(f"{flag} must list at least one integer")
    try:
        return [int(part) for part in items]
    except ValueError:
        raise ValueError(f"{flag} must be a comma-separated integer list, "
                         f"got {text!r}") from None


def _resolve_pattern(name: str, size: int):
    if name in _BUILTIN_PATTERNS:
        return _BUILTIN_PATTERNS[name](size), name
    text = Path(name).read_text()
    return load_pattern(text), Path(name).stem


def _cmd_encode(args) -> int:
    scheme = get_scheme(args.scheme)
    codeword = encode(args.value, args.range, scheme)
    print(codeword_to_text(codeword))
    return 0


def _cmd_classify(args) -> int:
    grid, pattern_id = _resolve_pattern(args.pattern, args.size)
    scheme = get_scheme(args.scheme)
    result, predicted = run_experiment(grid, scheme, args.n, args.r, args.seed,
                                       pattern_id=pattern_id)
    sys.stdout.write(render_map(predicted, grid))
    print(format_csv_row(result))
    return 0


def _print_summary(rows) -> None:
    means = mean_errors(rows)
    for n, r in sorted(means, key=lambda key: (-key[0], key[1])):
        print(f"n={n} r={r} mean_error={means[(n, r)]:.6f}")


def _cmd_sweep(args) -> int:
    grid, pattern_id = _resolve_pattern(args.pattern, args.size)
    scheme = get_scheme(args.scheme)
    ns = _parse_int_list(args.ns, "--ns")
    rs = _parse_int_list(args.rs, "--rs")
    if args.seeds < 1:
        raise ValueError("--seeds must be at least 1")
    seeds = list(range(args.seed, args.seed + args.seeds))
    rows = sweep(grid, scheme, ns, rs, seeds, pattern_id=pattern_id)
    Path(args.out).write_text(export_csv(rows))
    _print_summary(rows)
    return 0


def _cmd_report(args) -> int:
    rows = parse_csv(Path(args.csv).read_text())
    if not rows:
        raise ValueError(f"{args.csv} has no result rows")
    means = mean_errors(rows)
    for r in sorted({row.r for row in rows}):
        print(f"r={r}")
        for n in sorted({n for n, rr in means if rr == r}, reverse=True):
            total = next(row.total for row in rows if row.r == r and row.n == n)
            print(f"  n={n} n/N={n / total:.6f} mean_error={means[(n, r)]:.6f}")
        ratio = optimal_ratio(rows, r)
        print(f"  optimal n/N for r={r}: {ratio:.6f}")
        if r in (1, 2) and not _RATIO_BAND[0] <= ratio <= _RATIO_BAND[1]:
            print(f"WARN optimal n/N {ratio:.6f} for r={r} is outside "
                  f"[{_RATIO_BAND[0]:.2f}, {_RATIO_BAND[1]:.2f}]", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercc",
        description="Corner-classification networks over real, complex, "
                    "and quaternion input alphabets.")
    sub = parser.add_subparsers(dest="command", required=True)

    encode_p = sub.add_parser("encode", help="print the codeword for one value")
    encode_p.add_argument("--value", type=int, required=True)
    encode_p.add_argument("--range", type=int, required=True,
                          help="number of encodable values C")
    encode_p.add_argument("--scheme", default="quaternion",
                          choices=("unary", "quaternary", "quaternion"))
    encode_p.set_defaults(func=_cmd_encode)

    classify_p = sub.add_parser("classify",
                                help="train on sampled points and map one pattern")
    classify_p.add_argument("--pattern", default="spiral",
                            help="builtin name (spiral, box) or a pattern file path")
    classify_p.add_argument("--size", type=int, default=16,
                            help="grid size for builtin patterns")
    classify_p.add_argument("--scheme", default="quaternion",
                            choices=("unary", "quaternary", "quaternion"))
    classify_p.add_argument("--n", type=int, default=75, help="training point count")
    classify_p.add_argument("--r", type=int, default=2, help="radius of generalization")
    classify_p.add_argument("--seed", type=int, default=1)
    classify_p.set_defaults(func=_cmd_classify)

    sweep_p = sub.add_parser("sweep", help="run an (n, r, seed) grid and write CSV")
    sweep_p.add_argument("--pattern", default="spiral")
    sweep_p.add_argument("--size", type=int, default=16)
    sweep_p.add_argument("--scheme", default="quaternion",
                         choices=("unary", "quaternary", "quaternion"))
    sweep_p.add_argument("--ns", default="75,65,55,45,35,25",
                         help="comma-separated training point counts")
    sweep_p.add_argument("--rs", default="1,2,3,4", help="comma-separated radii")
    sweep_p.add_argument("--seeds", type=int, default=20,
                         help="number of consecutive base seeds")
    sweep_p.add_argument("--seed", type=int, default=1, help="first base seed")
    sweep_p.add_argument("--out", default="sweep.csv", help="output CSV path")
    sweep_p.set_defaults(func=_cmd_sweep)

    report_p = sub.add_parser("report", help="summarize a sweep CSV per radius")
    report_p.add_argument("csv", help="CSV file produced by sweep")
    report_p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
