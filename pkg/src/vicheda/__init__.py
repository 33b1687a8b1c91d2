"""Rule-based sandhi-vicheda for Hindi compound words."""

from .errors import (
    EmptyCorpus,
    EmptyLexicon,
    FileUnreadable,
    InputTooShort,
    MalformedSequence,
    NonDevanagariInput,
    NotComposable,
    VariantInapplicable,
    VichedaError,
)
from .evaluation import GoldEntry, Report, evaluate, load_gold
from .lexicon import EMPTY_LEXICON, Lexicon, RankedCandidates, best_split, load, rank
from .rules import (
    RuleCategory,
    RuleId,
    RuleSet,
    SandhiRule,
    SplitCandidate,
    build_ruleset,
    find_triggers,
    apply_rule,
    join,
    split_all,
)
from .script import (
    Akshara,
    CharClass,
    SCRIPT_TABLE,
    ScriptTable,
    classify,
    is_devanagari_word,
    normalize,
    segment,
)

__version__ = "0.1.0"

__all__ = [
    "Akshara",
    "CharClass",
    "EMPTY_LEXICON",
    "EmptyCorpus",
    "EmptyLexicon",
    "FileUnreadable",
    "GoldEntry",
    "InputTooShort",
    "Lexicon",
    "MalformedSequence",
    "NonDevanagariInput",
    "NotComposable",
    "RankedCandidates",
    "Report",
    "RuleCategory",
    "RuleId",
    "RuleSet",
    "SandhiRule",
    "SCRIPT_TABLE",
    "ScriptTable",
    "SplitCandidate",
    "VariantInapplicable",
    "VichedaError",
    "apply_rule",
    "best_split",
    "build_ruleset",
    "classify",
    "evaluate",
    "find_triggers",
    "is_devanagari_word",
    "join",
    "load",
    "load_gold",
    "normalize",
    "rank",
    "segment",
    "split_all",
]
