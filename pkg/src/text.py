"""
Identifier tokenization, stopword filtering and syntactic string metrics.

Jaro comes from rapidfuzz; the Winkler prefix bonus is applied here so that
it is always added (rapidfuzz only boosts scores above 0.7).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import regex
from rapidfuzz.distance import Jaro

from src import constants
from src.logger import logger

# acronym run before a capitalised word | capitalised or lower word | acronym
# | uncased script run (CJK, kana, ...) | digits
_TOKEN_RE = regex.compile(
    r"\p{Lu}+(?=\p{Lu}\p{Ll})|\p{Lu}?[\p{Ll}\p{M}]+|\p{Lu}+\p{M}*|[\p{Lo}\p{Lt}\p{Lm}\p{M}]+|\p{Nd}+"
)


def tokenize_identifier(s: str) -> list[str]:
    """
    Split an identifier into lowercase word tokens.

    Splits on non-alphanumeric separators, lower→upper camelCase boundaries,
    acronym boundaries and letter/digit boundaries.

    Examples:
        "GetWeatherByZipCode" -> ["get", "weather", "by", "zip", "code"]
        "HTTPResponse"        -> ["http", "response"]
        "user_id2"            -> ["user", "id", "2"]
        "naïveBayes"          -> ["naïve", "bayes"]
    """
    return [token.lower() for token in _TOKEN_RE.findall(s)]


def tokenize_text(text: str) -> list[str]:
    """Tokenize free text (glosses, descriptions) word by word."""
    return tokenize_identifier(text)


@dataclass(frozen=True)
class StopwordList:
    words: frozenset[str]

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


def load_stopwords(path: str | Path | None = None) -> StopwordList:
    """
    Load a stopword file (one lowercase word per line, UTF-8).

    The common words of the simplified Lesk algorithm are always included,
    whatever the file holds.
    """
    path = Path(path) if path else constants.DEFAULT_STOPWORD_FILE
    words = set(constants.LESK_COMMON_WORDS)
    with open(path, encoding="utf-8") as f:
        for line in f:
            word = line.strip().lower()
            if word and not word.startswith("#"):
                words.add(word)
    logger.debug(f"Loaded {len(words)} stopwords from {path}")
    return StopwordList(frozenset(words))


def default_stopwords() -> StopwordList:
    return load_stopwords(constants.DEFAULT_STOPWORD_FILE)


def remove_stopwords(tokens: Iterable[str], sw: StopwordList) -> list[str]:
    """Order-preserving removal of stopwords."""
    return [t for t in tokens if t not in sw]


def jaro(a: str, b: str) -> float:
    """
    Jaro similarity in [0, 1].

    1.0 when both strings are empty, 0.0 when exactly one is.
    """
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    # fixed argument order keeps the score bit-symmetric
    if b < a:
        a, b = b, a
    return Jaro.similarity(a, b)


def common_prefix_length(a: str, b: str, cap: int = constants.WINKLER_PREFIX_CAP) -> int:
    n = 0
    for x, y in zip(a[:cap], b[:cap]):
        if x != y:
            break
        n += 1
    return n


def jaro_winkler(
    a: str,
    b: str,
    prefix_scale: float = constants.WINKLER_PREFIX_SCALE,
) -> float:
    """
    Jaro-Winkler similarity: jaro + l * p * (1 - jaro).

    Args:
        a, b: strings to compare (case-sensitive)
        prefix_scale: p, 0.1 by default; l is the common prefix capped at 4

    Returns:
        Similarity in [0, 1]
    """
    j = jaro(a, b)
    prefix = common_prefix_length(a, b)
    return min(1.0, j + prefix * prefix_scale * (1.0 - j))
