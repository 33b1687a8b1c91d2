"""Gold-corpus loading and accuracy measurement.

The corpus is a TSV of compound, left, right and an optional rule id.  Two
numbers are reported: candidate recall (the gold pair appears somewhere in
the candidate list) and best accuracy (the top-ranked candidate is the gold
pair, matched codepoint-exact after NFC).
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from . import script
from .errors import EmptyCorpus, FileUnreadable, VichedaError
from .lexicon import Lexicon, rank
from .rules import RuleId, SplitCandidate, split_all

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoldEntry:
    compound: str
    left: str
    right: str
    rule_hint: RuleId | None = None


@dataclass
class Report:
    total: int
    candidate_recall: float
    best_accuracy: float
    per_rule: dict[RuleId, tuple[int, int]] = field(default_factory=dict)
    failures: list[tuple[GoldEntry, list[SplitCandidate]]] = field(default_factory=list)

    def summary_lines(self) -> list[str]:
        lines = [
            f"total\t{self.total}",
            f"candidate_recall\t{self.candidate_recall:.4f}",
            f"best_accuracy\t{self.best_accuracy:.4f}",
        ]
        for rule_id in sorted(self.per_rule):
            total, correct = self.per_rule[rule_id]
            lines.append(f"rule\t{rule_id.name}\t{correct}\t{total}")
        return lines

    def to_json(self) -> str:
        payload = {
            "total": self.total,
            "candidate_recall": self.candidate_recall,
            "best_accuracy": self.best_accuracy,
            "per_rule": {
                rid.name: {"total": tot, "correct": cor}
                for rid, (tot, cor) in sorted(self.per_rule.items())
            },
            "failures": [
                {
                    "compound": entry.compound,
                    "left": entry.left,
                    "right": entry.right,
                    "rule_hint": entry.rule_hint.name if entry.rule_hint else None,
                    "candidates": [
                        {
                            "left": c.left,
                            "right": c.right,
                            "rule": c.rule.name,
                            "tier": c.tier,
                        }
                        for c in candidates
                    ],
                }
                for entry, candidates in self.failures
            ],
        }
        return json.dumps(payload, ensure_ascii=False, indent=2)


def _parse_rule_hint(token: str) -> RuleId:
    try:
        return RuleId[token.strip()]
    except KeyError:
        raise ValueError(f"unknown rule id {token!r}") from None


def load_gold(path) -> list[GoldEntry]:
    """Read a gold TSV; malformed rows are logged and skipped."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read gold corpus {path}: {exc}") from exc
    entries: list[GoldEntry] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        columns = [col.strip() for col in line.split("\t")]
        if len(columns) not in (3, 4):
            log.warning("%s:%d: expected 3 or 4 columns, got %d", path, lineno, len(columns))
            continue
        compound, left, right = (script.normalize(c) for c in columns[:3])
        if not all(map(script.is_devanagari_word, (compound, left, right))):
            log.warning("%s:%d: skipped row with non-Devanagari word", path, lineno)
            continue
        if compound in (left, right):
            log.warning("%s:%d: compound equals one of its parts", path, lineno)
            continue
        rule_hint = None
        if len(columns) == 4 and columns[3]:
            try:
                rule_hint = _parse_rule_hint(columns[3])
            except ValueError as exc:
                log.warning("%s:%d: %s", path, lineno, exc)
                continue
        entries.append(GoldEntry(compound, left, right, rule_hint))
    if not entries:
        raise EmptyCorpus(f"no valid entries in {path}")
    return entries


def evaluate(gold: list[GoldEntry], lexicon: Lexicon) -> Report:
    """Score the engine against a gold corpus.

    Engine errors on individual entries count as misses, never abort the run.
    """
    if not gold:
        raise EmptyCorpus("gold corpus is empty")
    recall_hits = 0
    best_hits = 0
    per_rule: dict[RuleId, list[int]] = {}
    failures: list[tuple[GoldEntry, list[SplitCandidate]]] = []
    for entry in gold:
        try:
            candidates = split_all(entry.compound)
        except VichedaError:
            candidates = []
        ranked = list(rank(candidates, lexicon))
        gold_pair = (entry.left, entry.right)
        if any((c.left, c.right) == gold_pair for c in ranked):
            recall_hits += 1
        best_ok = bool(ranked) and (ranked[0].left, ranked[0].right) == gold_pair
        if best_ok:
            best_hits += 1
        else:
            failures.append((entry, ranked))
        if entry.rule_hint is not None:
            bucket = per_rule.setdefault(entry.rule_hint, [0, 0])
            bucket[0] += 1
            bucket[1] += int(best_ok)
    total = len(gold)
    return Report(
        total=total,
        candidate_recall=recall_hits / total,
        best_accuracy=best_hits / total,
        per_rule={rid: (tot, cor) for rid, (tot, cor) in per_rule.items()},
        failures=failures,
    )
