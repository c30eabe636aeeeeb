"""Command line front end.

Subcommands:
    classify   one class from coefficients or from a label
    enumerate  all family members for a range of q, as table, CSV or JSON
    bounds     point-count interval calculators
    label      label codec utilities

Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.
The q guard defaults to 1000000 and can be overridden per call with
--safe-bound or globally with the WEILLAB_SAFE_BOUND environment
variable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from .bounds import genus_bounds_on_surface, non_pp_bounds, serre_weil_interval, weil_restriction_bounds
from .classify import WrongKind
from .core import (
    InternalInvariantError,
    MalformedLabel,
    NotPrimePower,
    NotWeil,
    make_weil_quartic,
    parse_label,
    prime_power_decomposition,
    render_label,
)
from .records import FIELD_NAMES, ClassRecord, build_record, csv_row, records_for_q, to_json_line
from .two_adic import DegenerateDiscriminant

DEFAULT_SAFE_BOUND = 10**6

_TABLE_COLUMNS = (
    "q", "a", "b", "label", "class_kind", "b_case", "ordinary",
    "d", "split2_Kplus", "deg4_polarisation", "genus3_exists", "rule",
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract wants 1
    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(1, f"error: {message}\n")


def _safe_bound_default() -> int:
    raw = os.environ.get("WEILLAB_SAFE_BOUND")
    if raw is None:
        return DEFAULT_SAFE_BOUND
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: WEILLAB_SAFE_BOUND={raw!r} is not an integer")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weillab", description="Weil quartic classification and bounds")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_safe_bound(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--safe-bound",
            type=int,
            default=None,
            help="largest accepted q (default 10^6, or WEILLAB_SAFE_BOUND)",
        )

    p_classify = subparsers.add_parser("classify", help="classify one isogeny class")
    p_classify.add_argument("--q", type=int)
    p_classify.add_argument("--a", type=int)
    p_classify.add_argument("--b", type=int)
    p_classify.add_argument("--label", type=str)
    add_safe_bound(p_classify)

    p_enum = subparsers.add_parser("enumerate", help="enumerate family members over a q range")
    p_enum.add_argument("--q-min", type=int, required=True)
    p_enum.add_argument("--q-max", type=int, required=True)
    p_enum.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p_enum.add_argument("--only-no-genus3", action="store_true",
                        help="keep only classes with no genus-3 curve")
    p_enum.add_argument("--output", type=str, default=None, help="write records to a file")
    p_enum.add_argument("--jobs", type=int, default=1, help="worker threads (output is order-stable)")
    add_safe_bound(p_enum)

    p_bounds = subparsers.add_parser("bounds", help="point-count interval calculators")
    p_bounds.add_argument("--q", type=int, required=True)
    p_bounds.add_argument("--family", choices=("general", "wres", "nonpp", "serre"), required=True)
    p_bounds.add_argument("--a", type=int)
    p_bounds.add_argument("--pa", type=int)
    p_bounds.add_argument("--g", type=int)
    p_bounds.add_argument("--b", type=int, help="middle coefficient for the exact nonpp variant")
    add_safe_bound(p_bounds)

    p_label = subparsers.add_parser("label", help="encode or decode isogeny-class labels")
    p_label.add_argument("--encode", type=str, help="q,a,b")
    p_label.add_argument("--decode", type=str)
    add_safe_bound(p_label)

    return parser


def _resolve_bound(args: argparse.Namespace) -> int:
    return args.safe_bound if args.safe_bound is not None else _safe_bound_default()


def _check_q(q: int, bound: int) -> None:
    if q > bound:
        raise ValueError(f"q={q} exceeds the safe bound {bound}")


def _run_classify(args: argparse.Namespace, out: io.TextIOBase) -> int:
    bound = _resolve_bound(args)
    by_coeffs = args.q is not None or args.a is not None or args.b is not None
    by_label = args.label is not None
    if by_coeffs == by_label:
        raise ValueError("provide either --q/--a/--b or --label")
    if by_label:
        head, _, q_text = args.label.partition(".")
        if head == "2" and q_text.partition(".")[0].isdigit():
            _check_q(int(q_text.partition(".")[0]), bound)
        f = parse_label(args.label)
    else:
        if args.q is None or args.a is None or args.b is None:
            raise ValueError("coefficient form needs all of --q, --a and --b")
        _check_q(args.q, bound)
        f = make_weil_quartic(args.q, args.a, args.b)
    _check_q(f.q, bound)
    record = build_record(f)
    out.write(to_json_line(record) + "\n")
    return 0


def _record_sort_key(record: ClassRecord) -> tuple[int, int, int]:
    return (record.q, record.a, record.b)


def prime_powers_in_range(lo: int, hi: int) -> list[int]:
    """Prime powers q with lo <= q <= hi, ascending; other q are skipped."""
    found = [q for q in range(max(2, lo), hi + 1) if prime_power_decomposition(q) is not None]
    return found


def _summary_line(q_min: int, q_max: int, records: list[ClassRecord]) -> str:
    kinds = Counter(record.class_kind for record in records)
    verdicts = Counter(
        "yes" if record.genus3_exists else "no"
        for record in records
        if record.genus3_exists is not None
    )
    kind_part = " ".join(f"{name}={kinds.get(name, 0)}" for name in ("PirrA", "PirrB", "SpecialQ2", "SpecialQ3"))
    return (
        f"summary q={q_min}..{q_max}: records={len(records)} {kind_part} "
        f"genus3_yes={verdicts.get('yes', 0)} genus3_no={verdicts.get('no', 0)}"
    )


def _render_table(records: list[ClassRecord], out: io.TextIOBase) -> None:
    rows = [[_table_cell(record, name) for name in _TABLE_COLUMNS] for record in records]
    widths = [
        max(len(name), *(len(row[i]) for row in rows)) if rows else len(name)
        for i, name in enumerate(_TABLE_COLUMNS)
    ]
    out.write("  ".join(name.ljust(widths[i]) for i, name in enumerate(_TABLE_COLUMNS)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() + "\n")


def _table_cell(record: ClassRecord, name: str) -> str:
    value = getattr(record, name)
    if value is None:
        return "-"
    if value is True:
        return "yes"
    if value is False:
        return "no"
    return str(value)


def _run_enumerate(args: argparse.Namespace, out: io.TextIOBase, err: io.TextIOBase) -> int:
    bound = _resolve_bound(args)
    q_min, q_max = args.q_min, args.q_max
    if q_min < 2 or q_min > q_max:
        raise ValueError(f"need 2 <= q-min <= q-max, got {q_min}..{q_max}")
    _check_q(q_max, bound)
    if args.jobs < 1:
        raise ValueError(f"--jobs must be >= 1, got {args.jobs}")
    qs = prime_powers_in_range(q_min, q_max)
    if args.jobs == 1:
        per_q = [records_for_q(q) for q in qs]
    else:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            per_q = list(pool.map(records_for_q, qs))
    records = [record for chunk in per_q for record in sorted(chunk, key=_record_sort_key)]
    if args.only_no_genus3:
        records = [record for record in records if record.genus3_exists is False]

    sink = open(args.output, "w", encoding="utf-8", newline="") if args.output else out
    try:
        if args.format == "csv":
            writer = csv.writer(sink, lineterminator="\n")
            writer.writerow(FIELD_NAMES)
            for record in records:
                writer.writerow(csv_row(record))
        elif args.format == "json":
            for record in records:
                sink.write(to_json_line(record) + "\n")
        else:
            _render_table(records, sink)
    finally:
        if args.output:
            sink.close()

    summary = _summary_line(q_min, q_max, records)
    if args.format == "table" and not args.output:
        out.write(summary + "\n")
    else:
        err.write(summary + "\n")
    return 0


def _run_bounds(args: argparse.Namespace, out: io.TextIOBase) -> int:
    bound = _resolve_bound(args)
    _check_q(args.q, bound)
    if args.family == "general":
        if args.a is None or args.pa is None:
            raise ValueError("--family general needs --a and --pa")
        interval = genus_bounds_on_surface(args.q, args.a, args.pa)
    elif args.family == "wres":
        interval = weil_restriction_bounds(args.q)
    elif args.family == "nonpp":
        interval = non_pp_bounds(args.q, args.b)
    else:
        if args.g is None:
            raise ValueError("--family serre needs --g")
        interval = serre_weil_interval(args.q, args.g)
    payload = {
        "family": interval.family.value,
        "q": args.q,
        "center": interval.center,
        "radius": interval.radius,
        "lo": interval.lo,
        "hi": interval.hi,
        "raw_lo": interval.raw_lo,
    }
    if interval.note is not None:
        payload["note"] = interval.note
    out.write(json.dumps(payload, separators=(", ", ": ")) + "\n")
    return 0


def _run_label(args: argparse.Namespace, out: io.TextIOBase) -> int:
    bound = _resolve_bound(args)
    if (args.encode is None) == (args.decode is None):
        raise ValueError("provide exactly one of --encode q,a,b or --decode LABEL")
    if args.encode is not None:
        parts = args.encode.split(",")
        if len(parts) != 3:
            raise ValueError(f"--encode expects q,a,b, got {args.encode!r}")
        try:
            q, a, b = (int(part) for part in parts)
        except ValueError:
            raise ValueError(f"--encode expects three integers, got {args.encode!r}")
        _check_q(q, bound)
        out.write(str(render_label(make_weil_quartic(q, a, b))) + "\n")
        return 0
    head, _, rest = args.decode.partition(".")
    q_text = rest.partition(".")[0]
    if head == "2" and q_text.isdigit():
        _check_q(int(q_text), bound)
    f = parse_label(args.decode)
    out.write(f"q={f.q} a={f.a} b={f.b}\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)
    out, err = sys.stdout, sys.stderr
    try:
        if args.command == "classify":
            return _run_classify(args, out)
        if args.command == "enumerate":
            return _run_enumerate(args, out, err)
        if args.command == "bounds":
            return _run_bounds(args, out)
        return _run_label(args, out)
    except (NotPrimePower, NotWeil, MalformedLabel, WrongKind, DegenerateDiscriminant, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except (InternalInvariantError, AssertionError) as exc:
        err.write(f"internal error: {exc}\n")
        return 2


def main_entry() -> None:
    raise SystemExit(main())
