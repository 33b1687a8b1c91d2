from __future__ import annotations

import random
from pathlib import Path

import pytest

from vicheda import Lexicon, load, load_gold

ROOT = Path(__file__).resolve().parent.parent
TABLES_GOLD = ROOT / "gold" / "tables.tsv"
CORPUS = ROOT / "data" / "corpus.tsv"
WORDS = ROOT / "data" / "words.txt"

VIRAMA = "्"
CONSONANTS = [chr(cp) for cp in range(0x0915, 0x093A)]
VOWELS = list("अआइईउऊऋएऐओऔ")
MATRAS = list("ािीुूृेैोौ")
MODIFIERS = ["ं", "ः", "ँ"]


def random_akshara(rng: random.Random) -> str:
    if rng.random() < 0.12:
        part = rng.choice(VOWELS)
    else:
        part = ""
        if rng.random() < 0.15:
            part += rng.choice(CONSONANTS) + VIRAMA
            if rng.random() < 0.25:
                part += rng.choice(CONSONANTS) + VIRAMA
        part += rng.choice(CONSONANTS)
        if rng.random() < 0.55:
            part += rng.choice(MATRAS)
    if rng.random() < 0.10:
        part += rng.choice(MODIFIERS)
    return part


def random_word(rng: random.Random, min_aksharas: int = 2, max_aksharas: int = 6) -> str:
    """A well-formed Devanagari word built straight from the akshara grammar."""
    count = rng.randint(min_aksharas, max_aksharas)
    word = "".join(random_akshara(rng) for _ in range(count))
    if rng.random() < 0.05:
        word += rng.choice(CONSONANTS) + VIRAMA
    return word


@pytest.fixture(scope="session")
def tables_gold():
    return load_gold(TABLES_GOLD)


@pytest.fixture(scope="session")
def corpus_gold():
    return load_gold(CORPUS)


@pytest.fixture(scope="session")
def broad_lexicon():
    return load(WORDS)


@pytest.fixture(scope="session")
def constituents_lexicon(tables_gold):
    parts = {word for entry in tables_gold for word in (entry.left, entry.right)}
    return Lexicon.from_words(parts, "tables-constituents")
