"""Command-line interface: split, batch, eval, rules, interactive.

stdout carries only data; diagnostics go to stderr.  Exit codes: 0 success,
1 input or I/O error, 2 no split found (single-word mode).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import evaluation, lexicon as lexmod
from .errors import VichedaError
from .lexicon import EMPTY_LEXICON, Lexicon, rank
from .rules import RuleId, SplitCandidate, build_ruleset, split_all
from .script import normalize


@dataclass(frozen=True)
class OutputRecord:
    """What one word produced: ranked candidate rows plus the best pick."""

    input: str
    candidates: tuple[SplitCandidate, ...]

    @property
    def best(self) -> SplitCandidate | None:
        return self.candidates[0] if self.candidates else None


def make_record(word: str, lex: Lexicon) -> OutputRecord:
    word = normalize(word)
    ranked = rank(split_all(word), lex)
    return OutputRecord(input=word, candidates=ranked.candidates)


def _text_lines(record: OutputRecord, show_all: bool) -> list[str]:
    if show_all:
        return [
            f"{c.left} + {c.right} [{c.rule.name}] (tier {c.tier})"
            for c in record.candidates
        ]
    best = record.best
    return [f"{best.left} + {best.right} [{best.rule.name}]"] if best else []


def _tsv_lines(record: OutputRecord, show_all: bool) -> list[str]:
    rows = record.candidates if show_all else record.candidates[:1]
    return [
        "\t".join((record.input, c.left, c.right, c.rule.name, str(c.tier)))
        for c in rows
    ]


def _json_line(record: OutputRecord, show_all: bool) -> str:
    def row(c: SplitCandidate) -> dict:
        return {"left": c.left, "right": c.right, "rule": c.rule.name, "tier": c.tier}

    candidates = record.candidates if show_all else record.candidates[:1]
    payload = {
        "input": record.input,
        "candidates": [row(c) for c in candidates],
        "best": row(record.best) if record.best else None,
    }
    return json.dumps(payload, ensure_ascii=False)


def emit_record(record: OutputRecord, fmt: str | None, show_all: bool) -> None:
    if fmt == "tsv":
        lines = _tsv_lines(record, show_all)
    elif fmt == "json":
        lines = [_json_line(record, show_all)]
    else:
        lines = _text_lines(record, show_all)
    for line in lines:
        print(line)


def parse_tsv_records(text: str) -> list[OutputRecord]:
    """Inverse of the TSV emitter, used to round-trip CLI output."""
    by_input: dict[str, list[SplitCandidate]] = {}
    order: list[str] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        word, left, right, rule_name, tier = line.split("\t")
        if word not in by_input:
            by_input[word] = []
            order.append(word)
        by_input[word].append(
            SplitCandidate(
                left=left,
                right=right,
                rule=RuleId[rule_name],
                trigger_offset=-1,
                tier=int(tier),
            )
        )
    return [OutputRecord(word, tuple(by_input[word])) for word in order]


def _load_lexicon(path: str | None) -> Lexicon:
    if path is None:
        return EMPTY_LEXICON
    return lexmod.load(path)


def cmd_split(args: argparse.Namespace) -> int:
    try:
        lex = _load_lexicon(args.lexicon)
        record = make_record(args.word, lex)
    except VichedaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if not record.candidates:
        if args.format == "json":
            emit_record(record, "json", args.all)
        print("no split found", file=sys.stderr)
        return 2
    emit_record(record, args.format, args.all)
    return 0


def cmd_batch(args: argparse.Namespace) -> int:
    try:
        lex = _load_lexicon(args.lexicon)
        with open(args.file, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except (OSError, UnicodeDecodeError, VichedaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    failed = False
    for lineno, raw in enumerate(lines, 1):
        word = raw.strip()
        if not word:
            continue
        try:
            record = make_record(word, lex)
        except VichedaError as exc:
            print(f"line {lineno}: {word}: {exc}", file=sys.stderr)
            failed = True
            continue
        if args.format == "json":
            emit_record(record, "json", args.all)
        elif args.format == "tsv":
            if record.candidates:
                emit_record(record, "tsv", args.all)
            else:
                print(f"line {lineno}: {word}: no split found", file=sys.stderr)
        else:
            best = record.best
            if best is None:
                print(f"{record.input}\t(no split)")
            elif args.all:
                for line in _text_lines(record, True):
                    print(f"{record.input}\t{line}")
            else:
                print(f"{record.input}\t{best.left} + {best.right} [{best.rule.name}]")
    return 1 if failed else 0


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        gold = evaluation.load_gold(args.gold)
        lex = lexmod.load(args.lexicon)
        report = evaluation.evaluate(gold, lex)
    except VichedaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for line in report.summary_lines():
        print(line)
    if args.json:
        print(report.to_json())
    return 0


def cmd_rules(_args: argparse.Namespace) -> int:
    header = ("rule", "category", "trigger", "left variants", "right", "example")
    rows = [header]
    for rule in build_ruleset():
        compound, left, right = rule.example
        if rule.right_initial:
            right_col = rule.right_initial
        else:
            tails = sorted({t for ct in rule.cluster_triggers for t in ct.tails})
            right_col = "/".join(tails)
        rows.append(
            (
                rule.id.name,
                rule.category.value,
                rule.trigger_text(),
                rule.left_variants_text(),
                right_col,
                f"{compound} = {left} + {right}",
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    for row in rows:
        print("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return 0


def cmd_interactive(args: argparse.Namespace) -> int:
    try:
        lex = _load_lexicon(args.lexicon)
    except VichedaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    prompt = "> " if sys.stdin.isatty() else ""
    while True:
        if prompt:
            print(prompt, end="", file=sys.stderr, flush=True)
        line = sys.stdin.readline()
        if not line:
            return 0
        word = line.strip()
        if not word:
            continue
        if word in (":quit", ":q"):
            return 0
        if word == ":rules":
            cmd_rules(args)
            continue
        try:
            record = make_record(word, lex)
        except VichedaError as exc:
            print(f"error: {exc}", file=sys.stderr)
            continue
        if record.best is None:
            print("no split found", file=sys.stderr)
            continue
        emit_record(record, None, show_all=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vicheda",
        description="Split Hindi compound words into their constituents "
        "using nine classical sandhi rules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--all", action="store_true", help="print every ranked candidate")
        p.add_argument("--lexicon", metavar="PATH", help="word list used for ranking")
        p.add_argument("--format", choices=("tsv", "json"), help="machine-readable output")

    p_split = sub.add_parser("split", help="split one word")
    p_split.add_argument("word", help="Devanagari word")
    add_common(p_split)
    p_split.set_defaults(func=cmd_split)

    p_batch = sub.add_parser("batch", help="split every word in a file")
    p_batch.add_argument("file", help="UTF-8 file, one word per line")
    add_common(p_batch)
    p_batch.set_defaults(func=cmd_batch)

    p_eval = sub.add_parser("eval", help="score against a gold corpus")
    p_eval.add_argument("gold", help="TSV of compound, left, right[, rule]")
    p_eval.add_argument("--lexicon", metavar="PATH", required=True)
    p_eval.add_argument("--json", action="store_true", help="also print the JSON detail")
    p_eval.set_defaults(func=cmd_eval)

    p_rules = sub.add_parser("rules", help="print the rule reference table")
    p_rules.set_defaults(func=cmd_rules)

    p_inter = sub.add_parser("interactive", help="read words from stdin, one per line")
    p_inter.add_argument("--lexicon", metavar="PATH", help="word list used for ranking")
    p_inter.set_defaults(func=cmd_interactive)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
