"""Devanagari codepoint classification, normalization and akshara segmentation.

Everything downstream (trigger search, candidate validation, lexicon lookups)
operates on text that has passed through :func:`normalize` and, for whole
words, :func:`segment`.  Text is handled codepoint by codepoint; no locale or
ICU machinery is involved.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum

from .errors import MalformedSequence, NonDevanagariInput

BLOCK_FIRST = 0x0900
BLOCK_LAST = 0x097F

VIRAMA = "्"        # ्
VISARGA_SIGN = "ः"  # ः
ANUSVARA = "ं"      # ं
CANDRABINDU = "ँ"   # ँ
NUKTA = "़"         # ़

_ZERO_WIDTH = ("‌", "‍")  # ZWNJ, ZWJ

# Legacy two-part vowel spellings.  Unicode assigns the composed signs no
# canonical decomposition, so NFC leaves these pairs alone and they must be
# collapsed explicitly before rule triggers can match.
_TWO_PART_VOWELS = (
    ("ाऺ", "ऻ"),  # ा + ऺ -> ऻ
    ("ाॅ", "ॉ"),  # ा + ॅ -> ॉ
    ("ाॆ", "ॊ"),  # ा + ॆ -> ॊ
    ("ाे", "ो"),  # ा + े -> ो
    ("ाै", "ौ"),  # ा + ै -> ौ
)


class CharClass(Enum):
    """Classification of a single codepoint."""

    INDEPENDENT_VOWEL = "independent_vowel"
    CONSONANT = "consonant"
    DEPENDENT_VOWEL_SIGN = "dependent_vowel_sign"
    VIRAMA = "virama"
    VISARGA = "visarga"
    ANUSVARA_OR_CANDRABINDU = "anusvara_or_candrabindu"
    NUKTA = "nukta"
    DIGIT = "digit"
    OTHER = "other"


# Every codepoint of U+0900..U+097F falls in exactly one range below.
_CLASS_RANGES = (
    (0x0900, 0x0902, CharClass.ANUSVARA_OR_CANDRABINDU),
    (0x0903, 0x0903, CharClass.VISARGA),
    (0x0904, 0x0914, CharClass.INDEPENDENT_VOWEL),
    (0x0915, 0x0939, CharClass.CONSONANT),
    (0x093A, 0x093B, CharClass.DEPENDENT_VOWEL_SIGN),
    (0x093C, 0x093C, CharClass.NUKTA),
    (0x093D, 0x093D, CharClass.OTHER),       # avagraha
    (0x093E, 0x094C, CharClass.DEPENDENT_VOWEL_SIGN),
    (0x094D, 0x094D, CharClass.VIRAMA),
    (0x094E, 0x094F, CharClass.DEPENDENT_VOWEL_SIGN),
    (0x0950, 0x0954, CharClass.OTHER),       # om, accent marks
    (0x0955, 0x0957, CharClass.DEPENDENT_VOWEL_SIGN),
    (0x0958, 0x095F, CharClass.CONSONANT),   # nukta letters क़..य़
    (0x0960, 0x0961, CharClass.INDEPENDENT_VOWEL),
    (0x0962, 0x0963, CharClass.DEPENDENT_VOWEL_SIGN),
    (0x0964, 0x0965, CharClass.OTHER),       # dandas
    (0x0966, 0x096F, CharClass.DIGIT),
    (0x0970, 0x0971, CharClass.OTHER),
    (0x0972, 0x0977, CharClass.INDEPENDENT_VOWEL),
    (0x0978, 0x097F, CharClass.CONSONANT),
)


def classify(char: str) -> CharClass:
    """Return the class of a single character; non-Devanagari maps to OTHER."""
    cp = ord(char)
    if cp < BLOCK_FIRST or cp > BLOCK_LAST:
        return CharClass.OTHER
    for lo, hi, cls in _CLASS_RANGES:
        if lo <= cp <= hi:
            return cls
    raise AssertionError(f"unclassified codepoint U+{cp:04X}")


def _default_swar() -> frozenset[str]:
    # 11 vowel letters plus the anusvara/visarga forms counted as vowels in
    # traditional varnamala charts, giving the conventional total of 13.
    return frozenset(
        list("अआइईउऊऋएऐओऔ") + ["अ" + ANUSVARA, "अ" + VISARGA_SIGN]
    )


def _default_vyanjan() -> frozenset[str]:
    return frozenset("कखगघङचछजझञटठडढणतथदधनपफबभमयरलवशषसह")


def _default_matra() -> frozenset[str]:
    # 10 dependent vowel signs plus the three nasal/breath modifiers that the
    # traditional matra count of 13 includes.
    return frozenset(list("ािीुूृेैोौ") + [ANUSVARA, VISARGA_SIGN, CANDRABINDU])


@dataclass(frozen=True)
class ScriptTable:
    """The swar/vyanjan/matra inventory the rules operate over."""

    swar: frozenset[str] = field(default_factory=_default_swar)
    vyanjan: frozenset[str] = field(default_factory=_default_vyanjan)
    matra: frozenset[str] = field(default_factory=_default_matra)
    virama: str = VIRAMA
    visarga: str = VISARGA_SIGN


SCRIPT_TABLE = ScriptTable()


def normalize(text: str) -> str:
    """Canonical form used throughout: NFC, joiners stripped, trimmed.

    Total and idempotent; never raises.
    """
    text = text.strip()
    for zw in _ZERO_WIDTH:
        text = text.replace(zw, "")
    text = unicodedata.normalize("NFC", text)
    for pair, composed in _TWO_PART_VOWELS:
        if pair in text:
            text = text.replace(pair, composed)
    return text


def is_devanagari_word(text: str) -> bool:
    """True iff the normalized text is non-empty and entirely Devanagari."""
    word = normalize(text)
    if not word:
        return False
    return all(BLOCK_FIRST <= ord(ch) <= BLOCK_LAST for ch in word)


@dataclass(frozen=True)
class Akshara:
    """One orthographic syllable.

    ``cluster`` holds the half consonants preceding the base, virama implied
    after each.  ``dead`` marks a word-final consonant stopped by a virama
    (as in जगत्), the one position where a trailing virama is well formed.
    """

    cluster: tuple[str, ...]
    base: str
    vowel_sign: str
    modifiers: str
    start: int
    end: int
    dead: bool = False

    @property
    def text(self) -> str:
        parts = []
        for half in self.cluster:
            parts.append(half)
            parts.append(VIRAMA)
        parts.append(self.base)
        if self.dead:
            parts.append(VIRAMA)
        parts.append(self.vowel_sign)
        parts.append(self.modifiers)
        return "".join(parts)

    @property
    def vowel_sign_offset(self) -> int | None:
        """Absolute codepoint offset of the matra, if one is present."""
        if not self.vowel_sign:
            return None
        return self.end - len(self.modifiers) - 1


def segment(word: str) -> list[Akshara]:
    """Split a normalized Devanagari word into aksharas.

    Raises NonDevanagariInput for out-of-block letters and MalformedSequence
    for sequences no well-formed word contains (leading matra or virama,
    virama after anything but a consonant, stacked matras, digits or symbol
    codepoints inside a word).
    """
    if not word:
        raise MalformedSequence("empty input")
    for offset, ch in enumerate(word):
        if ord(ch) < BLOCK_FIRST or ord(ch) > BLOCK_LAST:
            raise NonDevanagariInput(
                f"non-Devanagari character {ch!r} at offset {offset}"
            )

    out: list[Akshara] = []
    i = 0
    n = len(word)
    while i < n:
        start = i
        cls = classify(word[i])
        cluster: tuple[str, ...] = ()
        vowel_sign = ""
        dead = False
        if cls is CharClass.INDEPENDENT_VOWEL:
            base = word[i]
            i += 1
        elif cls is CharClass.CONSONANT:
            halves: list[str] = []
            while True:
                j = i + 1
                if j < n and classify(word[j]) is CharClass.NUKTA:
                    j += 1
                if j < n and word[j] == VIRAMA:
                    if j + 1 < n and classify(word[j + 1]) is CharClass.CONSONANT:
                        halves.append(word[i:j])
                        i = j + 1
                        continue
                    if j + 1 == n:
                        base = word[i:j]
                        dead = True
                        i = j + 1
                        break
                    raise MalformedSequence(
                        f"virama not followed by a consonant at offset {j}"
                    )
                base = word[i:j]
                i = j
                if i < n and classify(word[i]) is CharClass.DEPENDENT_VOWEL_SIGN:
                    vowel_sign = word[i]
                    i += 1
                break
            cluster = tuple(halves)
        else:
            raise MalformedSequence(
                f"{word[i]!r} cannot start an akshara (offset {i})"
            )

        mods = []
        while i < n and classify(word[i]) in (
            CharClass.ANUSVARA_OR_CANDRABINDU,
            CharClass.VISARGA,
        ):
            mods.append(word[i])
            i += 1
        out.append(
            Akshara(
                cluster=cluster,
                base=base,
                vowel_sign=vowel_sign,
                modifiers="".join(mods),
                start=start,
                end=i,
                dead=dead,
            )
        )
    return out
