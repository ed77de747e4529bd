"""Command-line front end.

Exit status: 0 report produced, 1 usage error, 2 parse or validation
error, 3 argument cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .arguments import DEFAULT_ARGUMENT_CAP, ArgumentCapExceeded
from .cases import AggregationPolicy, LexiconError, load_lexicon
from .kb import KbError, is_proposition, parse_kb, validate_kb
from .report import render_structured, render_text, run_query
from .woe import StudyEvidence, classify_woe

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise _UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="argrisk", description="Argument-based qualitative risk assessment.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    query = sub.add_parser("query", help="report on one proposition")
    query.add_argument("kb_file", type=Path)
    query.add_argument("proposition")
    query.add_argument("--policy", choices=[p.value for p in AggregationPolicy], default="count")
    query.add_argument("--lexicon", type=Path)
    query.add_argument("--format", choices=["text", "structured"], default="text")
    query.add_argument("--cap", type=int, default=DEFAULT_ARGUMENT_CAP, help="maximum candidate arguments per proposition")

    levels = [level.value for level in StudyEvidence]
    woe = sub.add_parser("woe", help="overall weight-of-evidence category")
    woe.add_argument("human_level", choices=levels)
    woe.add_argument("animal_level", choices=levels)

    check = sub.add_parser("check", help="parse and validate a knowledge base")
    check.add_argument("kb_file", type=Path)
    return parser


def _read_kb(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"argrisk: cannot read {path}: {exc.strerror}") from None
    return parse_kb(text)


def _query(args) -> int:
    if not is_proposition(args.proposition):
        raise _UsageError(f"argrisk: invalid proposition name {args.proposition!r}")
    for path in filter(None, (args.kb_file, args.lexicon)):
        if not path.is_file():
            raise _UsageError(f"argrisk: no such file: {path}")
    if args.lexicon is not None:
        for warning in load_lexicon(args.lexicon)[1]:
            print(f"warning: {warning}", file=sys.stderr)
    report = run_query(args.kb_file, args.proposition, AggregationPolicy(args.policy), args.lexicon, args.cap)
    render = render_structured if args.format == "structured" else render_text
    sys.stdout.write(render(report))
    return EXIT_OK


def _check(args) -> int:
    kb = _read_kb(args.kb_file)
    warnings = validate_kb(kb)
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    print(f"{args.kb_file}: {len(kb)} items, {len(warnings)} warnings")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "woe":
            print(classify_woe(StudyEvidence(args.human_level), StudyEvidence(args.animal_level)).value)
            return EXIT_OK
        if args.command == "check":
            return _check(args)
        return _query(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (KbError, LexiconError, UnicodeDecodeError) as exc:
        print(f"argrisk: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ArgumentCapExceeded as exc:
        print(f"argrisk: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
