"""Command-line interface: ``beatty-lab <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import beatty, sequences, walk
from ._parallel import JOBS_ENV, resolve_jobs
from .exact import as_natural

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_SEQ_CHOICES = [s.value for s in sequences.SequenceId]


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    try:
        return as_natural(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beatty-lab",
        description="Exact computations on the Beatty sequence of sqrt(2).",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default="text")
    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument(
        "--jobs", type=_positive, default=None,
        help=f"worker processes (default: ${JOBS_ENV} or CPU count)",
    )

    p = sub.add_parser("terms", parents=[fmt], help="floor(n*sqrt(2)) for n = 1..count")
    p.add_argument("--count", type=_natural, required=True)

    p = sub.add_parser("parity", parents=[fmt], help="parity bits of the Beatty sequence (A083035)")
    p.add_argument("--count", type=_natural, required=True)

    p = sub.add_parser("check", parents=[fmt, jobs], help="sweep the six parity conditions")
    p.add_argument("--from", dest="lo", type=_natural, required=True)
    p.add_argument("--to", dest="hi", type=_natural, required=True)

    p = sub.add_parser("seq", parents=[fmt, jobs], help="indices satisfying condition (d) or (b)")
    p.add_argument("id", choices=["a090892", "a120752"])
    p.add_argument("--count", type=_natural, required=True)
    p.add_argument("--start", type=_natural, default=None)

    p = sub.add_parser("shift-check", parents=[fmt, jobs], help="A090892 minus two leading terms == A120752")
    p.add_argument("--count", type=_positive, required=True)

    p = sub.add_parser("complement-check", parents=[fmt, jobs], help="Beatty partition of [1, limit]")
    p.add_argument("--limit", type=_positive, required=True)

    p = sub.add_parser("lemma1", parents=[fmt], help="decide the lemma inequality for rationals")
    p.add_argument("values", nargs="+", metavar="X", help="nonnegative rational, e.g. 7/2")

    p = sub.add_parser("walk", help="render the Cloitre walk to SVG or PGM")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--count", type=_natural, help="use the first COUNT parity bits")
    src.add_argument("--bits", help="explicit bit string, e.g. 0110")
    src.add_argument("--bits-file", type=Path, help="file containing a bit string")
    p.add_argument("--format", choices=["svg", "pgm"], default="svg")
    p.add_argument("--output", "-o", type=Path, required=True)
    p.add_argument("--stroke-width", type=_positive_float, default=1.0)
    p.add_argument("--margin", type=_natural, default=2)
    p.add_argument("--stats-format", choices=["text", "json"], default="text")

    p = sub.add_parser("oeis-compare", parents=[fmt, jobs], help="compare a b-file with a generated sequence")
    p.add_argument("--bfile", type=Path, required=True)
    p.add_argument("--seq", choices=_SEQ_CHOICES, required=True)
    return parser


def _emit_json(out, data) -> None:
    json.dump(data, out, indent=2)
    out.write("\n")


def _emit_terms(out, values) -> None:
    # written piecewise so long outputs are not joined in memory
    first = True
    for v in values:
        if not first:
            out.write(" ")
        out.write(str(v))
        first = False
    out.write("\n")


def _cmd_terms(args, out) -> int:
    values = (beatty.beatty_sqrt2(n) for n in range(1, args.count + 1))
    if args.format == "json":
        _emit_json(out, {"start": 1, "terms": list(values)})
    else:
        _emit_terms(out, values)
    return EXIT_OK


def _cmd_parity(args, out) -> int:
    bits = sequences.parity_bits(args.count)
    if args.format == "json":
        _emit_json(out, {"start": bits.origin_index, "bits": list(bits)})
    else:
        _emit_terms(out, bits)
    return EXIT_OK


def _cmd_check(args, out) -> int:
    if args.lo > args.hi:
        raise UsageError(f"--from {args.lo} exceeds --to {args.hi}")
    report = beatty.check_equivalence(args.lo, args.hi, resolve_jobs(args.jobs))
    if args.format == "json":
        _emit_json(out, report.to_dict())
    else:
        out.write(f"checked {report.checked_count} indices in [{report.lo}, {report.hi}]: "
                  f"{len(report.counterexamples)} counterexamples\n")
        for cv in report.counterexamples:
            flags = " ".join(f"{k}={int(v)}" for k, v in zip(beatty.CONDITIONS, cv.flags))
            out.write(f"n={cv.n} p={cv.p} q={cv.q} {flags} sigma~{cv.sigma_decimal}\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_seq(args, out) -> int:
    try:
        spec = sequences.SequenceSpec(sequences.SequenceId(args.id), args.start)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    values = sequences.satisfying_indices(spec, args.count, resolve_jobs(args.jobs))
    if args.format == "json":
        _emit_json(out, {"id": spec.id.value, "start": spec.start_index, "terms": values})
    else:
        _emit_terms(out, values)
    return EXIT_OK


def _cmd_shift_check(args, out) -> int:
    ok = sequences.shift_identity_check(args.count, resolve_jobs(args.jobs))
    if args.format == "json":
        _emit_json(out, {"count": args.count, "holds": ok})
    else:
        verdict = "holds" if ok else "FAILS"
        out.write(f"shift identity {verdict} for the first {args.count} terms\n")
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_complement_check(args, out) -> int:
    report = beatty.complementarity_check(args.limit, resolve_jobs(args.jobs))
    if args.format == "json":
        _emit_json(out, report.to_dict())
    else:
        out.write(f"limit={report.limit} covered={str(report.covered).lower()} "
                  f"duplicates={len(report.duplicates)} gaps={len(report.gaps)}\n")
        if report.duplicates:
            out.write("duplicates: " + " ".join(map(str, report.duplicates[:20])) + "\n")
        if report.gaps:
            out.write("gaps: " + " ".join(map(str, report.gaps[:20])) + "\n")
    return EXIT_OK if report.covered else EXIT_FAIL


def _cmd_lemma1(args, out) -> int:
    try:
        xs = [beatty.as_rational(v) for v in args.values]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    results = [(str(x), beatty.lemma1_holds(x)) for x in xs]
    if args.format == "json":
        _emit_json(out, [{"x": x, "holds": ok} for x, ok in results])
    else:
        for x, ok in results:
            out.write(f"{x} {str(ok).lower()}\n")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FAIL


def _cmd_walk(args, out) -> int:
    try:
        if args.count is not None:
            bits = sequences.parity_bits(args.count)
        elif args.bits is not None:
            bits = sequences.BitStream.from_string(args.bits)
        else:
            bits = sequences.BitStream.from_string(args.bits_file.read_text(encoding="ascii"))
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    w = walk.cloitre_walk(bits)
    try:
        if args.format == "svg":
            data = walk.render_svg(w, args.stroke_width, args.margin).encode("utf-8")
        else:
            data = walk.render_pgm(w, args.margin)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    args.output.write_bytes(data)
    stats = walk.walk_stats(w)
    if args.stats_format == "json":
        _emit_json(out, {
            "output": str(args.output),
            "steps": len(bits),
            "endpoint": list(stats.endpoint),
            "bbox": list(stats.bbox),
            "distinct_points": stats.distinct_points,
            "final_heading": list(w.final_heading),
        })
    else:
        out.write(f"wrote {args.output} ({len(data)} bytes): steps={len(bits)} "
                  f"endpoint={stats.endpoint} bbox={stats.bbox} "
                  f"distinct_points={stats.distinct_points}\n")
    return EXIT_OK


def _cmd_oeis_compare(args, out) -> int:
    try:
        entries = sequences.parse_bfile(args.bfile.read_text(encoding="ascii"))
    except (OSError, UnicodeDecodeError, sequences.BFileError) as exc:
        raise UsageError(str(exc)) from None
    if not entries:
        raise UsageError(f"{args.bfile}: no entries")
    spec = sequences.SequenceSpec(sequences.SequenceId(args.seq))
    result = sequences.compare_with_bfile(entries, spec, resolve_jobs(args.jobs))
    if args.format == "json":
        _emit_json(out, {"seq": args.seq, **result.to_dict()})
    elif result.match:
        out.write(f"{args.seq}: match over {result.checked} entries\n")
    else:
        index, expected, got = result.first_mismatch
        out.write(f"{args.seq}: mismatch at index {index}: b-file {expected}, generated {got}\n")
    return EXIT_OK if result.match else EXIT_FAIL


_COMMANDS = {
    "terms": _cmd_terms,
    "parity": _cmd_parity,
    "check": _cmd_check,
    "seq": _cmd_seq,
    "shift-check": _cmd_shift_check,
    "complement-check": _cmd_complement_check,
    "lemma1": _cmd_lemma1,
    "walk": _cmd_walk,
    "oeis-compare": _cmd_oeis_compare,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"beatty-lab {args.command}: error: {exc}\n")
        return EXIT_USAGE
