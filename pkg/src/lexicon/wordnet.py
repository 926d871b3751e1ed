"""
WordNet lexicon: sense lookup with morphological normalization, hypernym
navigation and Wu-Palmer similarity.

Lemma lookup and morphology go through nltk's WordNetCorpusReader; the synset
views and depths are the ones computed by ``load_wordnet``.
"""

from __future__ import annotations

import threading
import warnings
from collections import deque
from pathlib import Path
from typing import Iterable, Iterator

from nltk.corpus.reader.wordnet import WordNetCorpusReader

from src.lexicon.model import POS_ORDER, PartOfSpeech, Synset, SynsetId

PosFilter = PartOfSpeech | Iterable[PartOfSpeech] | None


class _DictReader(WordNetCorpusReader):
    """Reader over a bare ``dict`` folder, without nltk's bundled 3.0 sense mapping."""

    def map_wn30(self):
        return None

    def map_wn(self, version="3.0"):
        return None


def open_reader(directory: str | Path) -> WordNetCorpusReader:
    with warnings.catch_warnings():
        # no multilingual wordnet is attached
        warnings.simplefilter("ignore")
        return _DictReader(str(directory), None)


def _pos_list(pos_filter: PosFilter) -> tuple[PartOfSpeech, ...]:
    if pos_filter is None:
        return POS_ORDER
    if isinstance(pos_filter, PartOfSpeech):
        return (pos_filter,)
    wanted = set(pos_filter)
    return tuple(p for p in POS_ORDER if p in wanted)


class Lexicon:
    """
    Read-only view over a loaded WordNet database.

    Built by ``load_wordnet``. The reader's file handles and the ancestor
    cache are guarded by a lock, so one instance can serve many threads.
    Pickling drops the reader; it is reopened from the directory on first use.
    """

    def __init__(
        self,
        directory: str | Path,
        synsets: dict[SynsetId, Synset],
        max_depths: dict[SynsetId, int] | None = None,
        reader: WordNetCorpusReader | None = None,
    ):
        self._directory = Path(directory)
        self._synsets = synsets
        # longest root path per synset, root = 1
        self._max_depths = max_depths or {sid: s.depth for sid, s in synsets.items()}
        self._reader = reader
        self._ancestor_cache: dict[SynsetId, dict[SynsetId, int]] = {}
        self._lock = threading.Lock()

    def __getstate__(self):
        state = self.__dict__.copy()
        del state["_lock"]
        state["_reader"] = None
        state["_ancestor_cache"] = {}
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._synsets)

    def all_synsets(self, pos: PartOfSpeech | None = None) -> Iterator[Synset]:
        for synset in self._synsets.values():
            if pos is None or synset.pos is pos:
                yield synset

    # ── Lookup ────────────────────────────────────────────────────────────

    def _senses(self, lemma: str, pos: PartOfSpeech) -> list:
        # caller holds the lock
        if self._reader is None:
            self._reader = open_reader(self._directory)
        return self._reader.synsets(lemma, pos.value)

    def lookup(self, lemma: str, pos_filter: PosFilter = None) -> list[Synset]:
        """
        Senses of *lemma* in WordNet frequency order.

        Inflected forms are reduced with WordNet's exception lists and
        detachment rules. Nouns are listed before verbs, adjectives and
        adverbs. An unknown lemma gives an empty list.
        """
        lemma = lemma.strip().lower().replace(" ", "_")
        if not lemma:
            return []
        senses: list[Synset] = []
        seen: set[SynsetId] = set()
        for pos in _pos_list(pos_filter):
            with self._lock:
                found = self._senses(lemma, pos)
            for entry in found:
                sid = SynsetId(PartOfSpeech.from_tag(entry.pos()), entry.offset())
                if sid not in seen:
                    seen.add(sid)
                    senses.append(self._synsets[sid])
        return senses

    def contains(self, lemma: str) -> bool:
        return bool(self.lookup(lemma))

    def synset(self, sid: SynsetId) -> Synset:
        return self._synsets[sid]

    # ── Taxonomy ──────────────────────────────────────────────────────────

    def ancestors(self, synset: Synset) -> dict[SynsetId, int]:
        """Every hypernym ancestor (and the synset itself) with its shortest distance."""
        with self._lock:
            cached = self._ancestor_cache.get(synset.id)
        if cached is not None:
            return cached

        distances = {synset.id: 0}
        queue = deque([synset.id])
        while queue:
            current = queue.popleft()
            for parent in self._synsets[current].hypernyms:
                if parent not in distances:
                    distances[parent] = distances[current] + 1
                    queue.append(parent)

        with self._lock:
            self._ancestor_cache[synset.id] = distances
        return distances

    def max_depth(self, synset: Synset) -> int:
        return self._max_depths[synset.id]

    def wu_palmer(self, s1: Synset, s2: Synset) -> float:
        """
        Wu-Palmer similarity in [0, 1].

        For every common ancestor c the score is 2*d / ((d + n1) + (d + n2)),
        with d the depth of c along its longest root path and n1, n2 the
        shortest hypernym distances from s1, s2 to c. The best c wins.
        Different parts of speech, adjectives and adverbs score 0.
        """
        if s1.pos is not s2.pos or not s1.pos.has_hierarchy:
            return 0.0
        if s1.id == s2.id:
            return 1.0

        up1 = self.ancestors(s1)
        up2 = self.ancestors(s2)
        best = 0.0
        for sid in up1.keys() & up2.keys():
            depth = self._max_depths[sid]
            score = 2.0 * depth / ((depth + up1[sid]) + (depth + up2[sid]))
            if score > best:
                best = score
        return best
