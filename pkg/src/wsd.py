"""
Simplified Lesk word-sense disambiguation.

The most frequent sense is the starting guess; a later sense replaces it only
when its signature overlaps the context strictly more. Overlap counts pairs
of signature and context words whose Jaro-Winkler score clears a threshold.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable

from src import constants
from src.lexicon import Lexicon, Synset
from src.lexicon.wordnet import PosFilter
from src.text import StopwordList, jaro_winkler, remove_stopwords, tokenize_text


@dataclass(frozen=True)
class Context:
    """Words surrounding the word being disambiguated, stopwords removed."""
    tokens: frozenset[str] = frozenset()

    @classmethod
    def from_tokens(cls, tokens: Iterable[str], stopwords: StopwordList) -> Context:
        return cls(frozenset(t for t in tokens if t and t not in stopwords))

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(sorted(self.tokens))


def compute_overlap(
    signature: Iterable[str],
    ctx: Context,
    threshold: float = constants.DEFAULT_WSD_OVERLAP_THRESHOLD,
) -> int:
    """Number of (signature word, context word) pairs with jaro_winkler > threshold."""
    count = 0
    for w1 in signature:
        for w2 in ctx.tokens:
            if jaro_winkler(w1, w2) > threshold:
                count += 1
    return count


class SenseDisambiguator:
    """
    Lesk disambiguation bound to one lexicon and stopword list.

    Signatures and decisions are memoized; the caches are guarded by a lock so
    an instance may be shared between threads. Decisions are keyed by context
    and are dropped by the comparator after each service pair.
    """

    def __init__(
        self,
        lexicon: Lexicon,
        stopwords: StopwordList,
        threshold: float = constants.DEFAULT_WSD_OVERLAP_THRESHOLD,
    ):
        self.lexicon = lexicon
        self.stopwords = stopwords
        self.threshold = threshold
        self._signatures: dict = {}
        self._decisions: dict = {}
        self._lock = threading.Lock()

    def __getstate__(self):
        state = self.__dict__.copy()
        del state["_lock"]
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.Lock()

    def clear_decisions(self) -> None:
        """Forget memoized sense choices; gloss signatures are kept."""
        with self._lock:
            self._decisions.clear()

    def signature(self, synset: Synset) -> tuple[str, ...]:
        """Gloss words (examples included) plus member lemmas, without stopwords."""
        with self._lock:
            cached = self._signatures.get(synset.id)
        if cached is not None:
            return cached

        words = tokenize_text(synset.gloss)
        for example in synset.examples:
            words.extend(tokenize_text(example))
        for lemma in synset.words:
            words.extend(tokenize_text(lemma.replace("_", " ")))
        signature = tuple(dict.fromkeys(remove_stopwords(words, self.stopwords)))

        with self._lock:
            self._signatures[synset.id] = signature
        return signature

    def disambiguate(self, word: str, ctx: Context, pos_filter: PosFilter = None) -> Synset | None:
        """
        Pick the sense of *word* best supported by *ctx*.

        Returns:
            The chosen Synset, or None when the word has no senses under pos_filter
        """
        key_filter = pos_filter if pos_filter is None or isinstance(pos_filter, str) else tuple(pos_filter)
        key = (word, key_filter, ctx.tokens)
        with self._lock:
            if key in self._decisions:
                return self._decisions[key]

        senses = self.lexicon.lookup(word, pos_filter)
        best = senses[0] if senses else None
        if best is not None and len(senses) > 1 and ctx.tokens:
            best_overlap = compute_overlap(self.signature(best), ctx, self.threshold)
            for sense in senses[1:]:
                overlap = compute_overlap(self.signature(sense), ctx, self.threshold)
                if overlap > best_overlap:
                    best, best_overlap = sense, overlap

        with self._lock:
            self._decisions[key] = best
        return best


def disambiguate(
    lex: Lexicon,
    word: str,
    ctx: Context,
    stopwords: StopwordList,
    pos_filter: PosFilter = None,
    threshold: float = constants.DEFAULT_WSD_OVERLAP_THRESHOLD,
) -> Synset | None:
    """One-off disambiguation without a shared cache."""
    return SenseDisambiguator(lex, stopwords, threshold).disambiguate(word, ctx, pos_filter)
