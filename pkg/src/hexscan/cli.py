"""Command-line entry point: ``hexscan {scan,syllabify,evaluate,compare,dump-fst}``.

Exit status is 0 when every verse was scanned or cleanly rejected, 1 when
some verse could not be processed, and 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .config import ConfigError, load_config
from .evaluate import AnnotationFormatError, compare_annotations, evaluate, read_annotations
from .fst import build_transducer
from .greek_text import UnprocessableVerseError, normalize
from .pipeline import MODES, format_structured, format_summary, format_tsv, parse_line, scan_corpus
from .syllabifier import EmptyVerseError, render_syllables, syllabify

EXIT_OK = 0
EXIT_UNPROCESSABLE = 1
EXIT_USAGE = 2

logger = logging.getLogger("hexscan")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", metavar="PATH", help="key = value configuration file")
    p.add_argument("--format", choices=("tsv", "structured"), default="tsv", help="output format (default: tsv)")
    p.add_argument("--strict", action="store_true", help="never override rule-confirmed lengths")
    p.add_argument("-o", "--output", metavar="PATH", help="write to PATH instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="hexscan", description="Automatic scansion of Greek hexameter verse.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", parents=[common], help="scan verses, one per line")
    scan.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
    scan.add_argument("--stats", action="store_true", help="print summary counts to stderr")
    scan.add_argument("--trace", action="store_true", help="print local search state sequences to stderr")
    scan.add_argument("--mode", choices=MODES, default="complete", help="pipeline depth (default: complete)")
    scan.add_argument("--workers", type=int, default=1, metavar="N", help="worker processes (default: 1)")

    syl = sub.add_parser("syllabify", parents=[common], help="print verse TAB syllables")
    syl.add_argument("input", nargs="?", default="-")

    ev = sub.add_parser("evaluate", parents=[common], help="score scan output against a gold file")
    ev.add_argument("predicted")
    ev.add_argument("gold")

    cmp_ = sub.add_parser("compare", parents=[common], help="agreement between two annotation files")
    cmp_.add_argument("a")
    cmp_.add_argument("b")
    cmp_.add_argument("--exclude-rejections", action="store_true", help="leave rejected verses out of kappa")

    sub.add_parser("dump-fst", parents=[common], help="print the weighted transducer as an edge list")
    return parser


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path, encoding="utf-8") as fh:
        return fh.read().splitlines()


def _write(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_scan(args, config) -> int:
    if args.workers < 1:
        raise ValueError("--workers must be at least 1")
    records, summary = scan_corpus(_read_lines(args.input), config, args.mode, args.workers)
    fmt = format_structured if args.format == "structured" else format_tsv
    _write(fmt(records), args.output)
    if args.trace:
        for r in records:
            sys.stderr.write(f"{r.id}\t{' > '.join(r.trace)}\n")
    if args.stats:
        sys.stderr.write(json.dumps(summary, ensure_ascii=False) + "\n" if args.format == "structured" else format_summary(summary))
    for r in records:
        if r.status == "unprocessable":
            logger.warning("verse %s: %s", r.id, r.notes)
    return EXIT_UNPROCESSABLE if summary["status"]["unprocessable"] else EXIT_OK


def _cmd_syllabify(args, config) -> int:
    # a leading id<TAB> is kept in the echoed line
    out = []
    status = EXIT_OK
    for n, line in enumerate(_read_lines(args.input), start=1):
        parsed = parse_line(line, n)
        if parsed is None:
            continue
        try:
            seg = render_syllables(syllabify(normalize(parsed[1]), config.rules.diphthongs))
        except (UnprocessableVerseError, EmptyVerseError) as exc:
            logger.warning("%s", exc)
            seg = ""
            status = EXIT_UNPROCESSABLE
        if args.format == "structured":
            out.append(json.dumps({"id": parsed[0], "verse": parsed[1], "syllables": seg}, ensure_ascii=False) + "\n")
        else:
            out.append(f"{line}\t{seg}\n")
    _write("".join(out), args.output)
    return status


def _report(report, args):
    if args.format == "structured":
        _write(json.dumps(report.summary(), ensure_ascii=False, indent=2) + "\n", args.output)
    else:
        _write(report.text(), args.output)


def _cmd_evaluate(args, config) -> int:
    _report(evaluate(read_annotations(args.predicted), read_annotations(args.gold)), args)
    return EXIT_OK


def _cmd_compare(args, config) -> int:
    include = config.kappa_include_rejections and not args.exclude_rejections
    _report(compare_annotations(args.a, args.b, include), args)
    return EXIT_OK


def _cmd_dump_fst(args, config) -> int:
    _write(build_transducer(config.weights).dump(), args.output)
    return EXIT_OK


COMMANDS = {
    "scan": _cmd_scan,
    "syllabify": _cmd_syllabify,
    "evaluate": _cmd_evaluate,
    "compare": _cmd_compare,
    "dump-fst": _cmd_dump_fst,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        config = load_config(args.config)
        if args.strict:
            config = config.with_strict()
        return COMMANDS[args.command](args, config)
    except (ConfigError, AnnotationFormatError, OSError, ValueError) as exc:
        print(f"hexscan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
