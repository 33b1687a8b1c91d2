"""The nine sandhi-vicheda rewrites: trigger search, split generation, rejoin.

Rules R1-R7 undo vowel coalescence (a trigger matra is replaced by a word
boundary plus an independent vowel), R8 undoes the inserted half च before छ,
and R9 restores a visarga that surfaced as a half sibilant.  ``join`` is the
exact inverse of ``apply_rule`` and is used as the round-trip oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum

from .errors import (
    InputTooShort,
    NotComposable,
    VariantInapplicable,
    VichedaError,
)
from .script import VIRAMA, VISARGA_SIGN, CharClass, classify, normalize, segment

MATRA_AA = "ा"  # ा
MATRA_I = "ि"   # ि
MATRA_II = "ी"  # ी
MATRA_E = "े"   # े
MATRA_AI = "ै"  # ै
MATRA_O = "ो"   # ो


class RuleId(IntEnum):
    R1 = 1
    R2 = 2
    R3 = 3
    R4 = 4
    R5 = 5
    R6 = 6
    R7 = 7
    R8 = 8
    R9 = 9

    def __str__(self) -> str:
        return self.name


class RuleCategory(Enum):
    SVARA = "svara"
    VYANJANA = "vyanjana"
    VISARGA = "visarga"


@dataclass(frozen=True)
class VowelTrigger:
    """A trigger matra plus the endings the left word may take.

    Endings are appended to the stem in front of the matra; the empty ending
    keeps the bare consonant with its inherent vowel.
    """

    matra: str
    left_endings: tuple[str, ...]


@dataclass(frozen=True)
class ClusterTrigger:
    """A half consonant plus the full consonants that may follow it."""

    head: str
    tails: frozenset[str]


@dataclass(frozen=True)
class SandhiRule:
    id: RuleId
    category: RuleCategory
    right_initial: str
    vowel_triggers: tuple[VowelTrigger, ...] = ()
    cluster_triggers: tuple[ClusterTrigger, ...] = ()
    example: tuple[str, str, str] = ("", "", "")

    def trigger_text(self) -> str:
        """Human-readable trigger description for the rule table."""
        if self.category is RuleCategory.SVARA:
            return " / ".join(t.matra for t in self.vowel_triggers)
        pats = []
        for t in self.cluster_triggers:
            for tail in sorted(t.tails):
                pats.append(f"{t.head}{VIRAMA}+{tail}")
        return " / ".join(pats)

    def left_variants_text(self) -> str:
        if self.category is RuleCategory.SVARA:
            seen = []
            for t in self.vowel_triggers:
                for ending in t.left_endings:
                    label = "C" + ending if ending else "C"
                    if label not in seen:
                        seen.append(label)
            return ", ".join(seen)
        if self.category is RuleCategory.VYANJANA:
            return "prefix unchanged"
        return "prefix + " + VISARGA_SIGN


@dataclass(frozen=True)
class SplitCandidate:
    """One proposed decomposition of a compound."""

    left: str
    right: str
    rule: RuleId
    trigger_offset: int
    tier: int | None = None

    @property
    def key(self) -> tuple[str, str, RuleId]:
        return (self.left, self.right, self.rule)


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[SandhiRule, ...]

    def __post_init__(self) -> None:
        ids = [rule.id for rule in self.rules]
        if ids != list(RuleId):
            raise ValueError(f"rule set must hold R1..R9 in order, got {ids}")

    def __iter__(self):
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __getitem__(self, rule_id: RuleId) -> SandhiRule:
        return self.rules[int(rule_id) - 1]


_BARE_OR_AA = ("", MATRA_AA)
_I_OR_II = (MATRA_I, MATRA_II)

_RULESET = RuleSet(
    rules=(
        SandhiRule(
            id=RuleId.R1,
            category=RuleCategory.SVARA,
            right_initial="अ",
            vowel_triggers=(VowelTrigger(MATRA_AA, _BARE_OR_AA),),
            example=("स्वार्थी", "स्व", "अर्थी"),
        ),
        SandhiRule(
            id=RuleId.R2,
            category=RuleCategory.SVARA,
            right_initial="आ",
            vowel_triggers=(VowelTrigger(MATRA_AA, _BARE_OR_AA),),
            example=("शिवालय", "शिव", "आलय"),
        ),
        SandhiRule(
            id=RuleId.R3,
            category=RuleCategory.SVARA,
            right_initial="इ",
            vowel_triggers=(
                VowelTrigger(MATRA_E, _BARE_OR_AA),
                VowelTrigger(MATRA_II, _I_OR_II),
            ),
            example=("नरेन्द्र", "नर", "इन्द्र"),
        ),
        SandhiRule(
            id=RuleId.R4,
            category=RuleCategory.SVARA,
            right_initial="ई",
            vowel_triggers=(
                VowelTrigger(MATRA_E, _BARE_OR_AA),
                VowelTrigger(MATRA_II, _I_OR_II),
            ),
            example=("गणेश", "गण", "ईश"),
        ),
        SandhiRule(
            id=RuleId.R5,
            category=RuleCategory.SVARA,
            right_initial="उ",
            vowel_triggers=(VowelTrigger(MATRA_O, _BARE_OR_AA),),
            example=("परोपकार", "पर", "उपकार"),
        ),
        SandhiRule(
            id=RuleId.R6,
            category=RuleCategory.SVARA,
            right_initial="ए",
            vowel_triggers=(VowelTrigger(MATRA_AI, _BARE_OR_AA),),
            example=("एकैक", "एक", "एक"),
        ),
        SandhiRule(
            id=RuleId.R7,
            category=RuleCategory.SVARA,
            right_initial="ऐ",
            vowel_triggers=(VowelTrigger(MATRA_AI, _BARE_OR_AA),),
            example=("परमैश्वर्य", "परम", "ऐश्वर्य"),
        ),
        SandhiRule(
            id=RuleId.R8,
            category=RuleCategory.VYANJANA,
            right_initial="छ",
            cluster_triggers=(ClusterTrigger("च", frozenset("छ")),),
            example=("विच्छेद", "वि", "छेद"),
        ),
        SandhiRule(
            id=RuleId.R9,
            category=RuleCategory.VISARGA,
            right_initial="",
            cluster_triggers=(
                ClusterTrigger("श", frozenset("चछ")),
                ClusterTrigger("स", frozenset("तथस")),
            ),
            example=("निश्चल", "निः", "चल"),
        ),
    )
)


def build_ruleset() -> RuleSet:
    """The fixed table of nine rules, in rule order."""
    return _RULESET


def _ends_with_consonant(text: str) -> bool:
    if not text:
        return False
    last = classify(text[-1])
    if last is CharClass.CONSONANT:
        return True
    # a trailing nukta still closes on a consonant (ज़ etc.)
    return (
        last is CharClass.NUKTA
        and len(text) > 1
        and classify(text[-2]) is CharClass.CONSONANT
    )


def _check_part(text: str) -> None:
    """Raise VariantInapplicable unless text is a usable candidate word."""
    if not text or text.endswith(VIRAMA):
        raise VariantInapplicable(f"{text!r} is not a well-formed word")
    try:
        segment(text)
    except VichedaError as exc:
        raise VariantInapplicable(f"{text!r} is not a well-formed word") from exc


def _cluster_matches(trigger: ClusterTrigger, word: str, offset: int) -> bool:
    return (
        word[offset] == trigger.head
        and word[offset + 1 : offset + 2] == VIRAMA
        and word[offset + 2 : offset + 3] in trigger.tails
    )


def _rule_matches(rule: SandhiRule, word: str, offset: int) -> bool:
    if rule.category is RuleCategory.SVARA:
        return any(t.matra == word[offset] for t in rule.vowel_triggers)
    if offset == 0:
        # a cluster at the very start would leave an empty left word
        return False
    return any(_cluster_matches(t, word, offset) for t in rule.cluster_triggers)


def find_triggers(word: str) -> list[tuple[int, list[RuleId]]]:
    """All codepoint offsets where some rule triggers, with the matching ids.

    The word must be normalized; segmentation errors propagate and fewer
    than two aksharas raise InputTooShort.  Offsets ascend and ids within a
    site follow rule order.
    """
    aksharas = segment(word)
    if len(aksharas) < 2:
        raise InputTooShort(f"{word!r} has fewer than two aksharas")
    sites: list[tuple[int, list[RuleId]]] = []
    for offset in range(len(word)):
        ids = [rule.id for rule in _RULESET if _rule_matches(rule, word, offset)]
        if ids:
            sites.append((offset, ids))
    return sites


def apply_rule(word: str, offset: int, rule: SandhiRule) -> list[SplitCandidate]:
    """All candidates one rule yields at one trigger site, in variant order.

    Variants whose transformed left (or right) word would be malformed are
    skipped rather than raised.
    """
    candidates: list[SplitCandidate] = []
    if rule.category is RuleCategory.SVARA:
        trigger = next(
            (t for t in rule.vowel_triggers if t.matra == word[offset : offset + 1]),
            None,
        )
        if trigger is None:
            raise ValueError(
                f"{rule.id} does not trigger at offset {offset} of {word!r}"
            )
        stem = word[:offset]
        right = rule.right_initial + word[offset + 1 :]
        for ending in trigger.left_endings:
            try:
                _check_part(stem + ending)
                _check_part(right)
            except VariantInapplicable:
                continue
            candidates.append(SplitCandidate(stem + ending, right, rule.id, offset))
        return candidates

    if not _rule_matches(rule, word, offset):
        raise ValueError(f"{rule.id} does not trigger at offset {offset} of {word!r}")
    if rule.category is RuleCategory.VYANJANA:
        left = word[:offset]
    else:
        left = word[:offset] + VISARGA_SIGN
    right = word[offset + 2 :]
    try:
        _check_part(left)
        _check_part(right)
    except VariantInapplicable:
        return []
    return [SplitCandidate(left, right, rule.id, offset)]


def split_all(word: str) -> list[SplitCandidate]:
    """Every candidate split of a word, ordered by (offset, rule, variant).

    Input is normalized first; duplicates by (left, right, rule) are dropped.
    """
    word = normalize(word)
    candidates: list[SplitCandidate] = []
    seen: set[tuple[str, str, RuleId]] = set()
    for offset, ids in find_triggers(word):
        for rule_id in ids:
            for cand in apply_rule(word, offset, _RULESET[rule_id]):
                if cand.key in seen:
                    continue
                seen.add(cand.key)
                candidates.append(cand)
    return candidates


def join(candidate: SplitCandidate) -> str:
    """Re-apply the rule's forward composition; exact inverse of apply_rule.

    Raises NotComposable when the candidate's parts do not fit the rule.
    """
    rule = _RULESET[candidate.rule]
    left, right = candidate.left, candidate.right
    try:
        _check_part(left)
        _check_part(right)
    except VariantInapplicable as exc:
        raise NotComposable(str(exc)) from exc

    if rule.category is RuleCategory.SVARA:
        if not right.startswith(rule.right_initial):
            raise NotComposable(
                f"right word must start with {rule.right_initial} for {rule.id}"
            )
        tail = right[len(rule.right_initial) :]
        for trigger in rule.vowel_triggers:
            for ending in trigger.left_endings:
                if ending and left.endswith(ending):
                    stem = left[: -len(ending)]
                    if _ends_with_consonant(stem):
                        return stem + trigger.matra + tail
        for trigger in rule.vowel_triggers:
            if "" in trigger.left_endings and _ends_with_consonant(left):
                return left + trigger.matra + tail
        raise NotComposable(f"{left!r} does not fit any left ending of {rule.id}")

    if rule.category is RuleCategory.VYANJANA:
        trigger = rule.cluster_triggers[0]
        if right[:1] not in trigger.tails:
            raise NotComposable(f"right word must start with छ for {rule.id}")
        return left + trigger.head + VIRAMA + right

    if not left.endswith(VISARGA_SIGN):
        raise NotComposable(f"left word must end with visarga for {rule.id}")
    stem = left[:-1]
    if not stem:
        raise NotComposable("left word is a bare visarga")
    for trigger in rule.cluster_triggers:
        if right[:1] in trigger.tails:
            return stem + trigger.head + VIRAMA + right
    raise NotComposable(
        f"right word must start with one of the {rule.id} cluster consonants"
    )
