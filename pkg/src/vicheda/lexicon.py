"""Word-list loading, candidate validation and ranking.

The lexicon is a flat newline-delimited word list ('#' starts a comment).
Ranking is three tiers: both parts known, one part known, neither; within a
tier the engine's deterministic rule order is kept.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from pathlib import Path

from . import script
from .errors import EmptyLexicon, FileUnreadable
from .rules import SplitCandidate, split_all

log = logging.getLogger(__name__)

TIER_BOTH = 1
TIER_ONE = 2
TIER_NONE = 3


@dataclass(frozen=True)
class Lexicon:
    """Immutable set of validated words; membership is exact on NFC form."""

    words: frozenset[str]
    source: str = "<memory>"

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def from_words(cls, words, source: str = "<memory>") -> "Lexicon":
        kept = set()
        for word in words:
            normalized = script.normalize(word)
            if script.is_devanagari_word(normalized):
                kept.add(normalized)
        return cls(frozenset(kept), source)


EMPTY_LEXICON = Lexicon(frozenset(), "<empty>")


def load(path) -> Lexicon:
    """Load a lexicon file; bad lines are logged with their number and skipped."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read lexicon {path}: {exc}") from exc
    words = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        word = script.normalize(line)
        if not script.is_devanagari_word(word):
            log.warning("%s:%d: skipped non-Devanagari entry %r", path, lineno, line)
            continue
        words.add(word)
    if not words:
        raise EmptyLexicon(f"no valid entries in {path}")
    return Lexicon(frozenset(words), str(path))


@dataclass(frozen=True)
class RankedCandidates:
    """Candidates sorted by (tier, rule, offset, variant order)."""

    candidates: tuple[SplitCandidate, ...]

    def __iter__(self):
        return iter(self.candidates)

    def __len__(self) -> int:
        return len(self.candidates)

    def best(self) -> SplitCandidate | None:
        return self.candidates[0] if self.candidates else None


def tier_of(candidate: SplitCandidate, lexicon: Lexicon) -> int:
    return TIER_NONE - (candidate.left in lexicon) - (candidate.right in lexicon)


def rank(candidates, lexicon: Lexicon) -> RankedCandidates:
    """Assign tiers and sort; the sort is stable so variant order survives."""
    tiered = [replace(c, tier=tier_of(c, lexicon)) for c in candidates]
    tiered.sort(key=lambda c: (c.tier, c.rule, c.trigger_offset))
    return RankedCandidates(tuple(tiered))


def best_split(word: str, lexicon: Lexicon) -> SplitCandidate | None:
    """Top-ranked split of a word, or None when no rule fires."""
    return rank(split_all(word), lexicon).best()
