"""
Service similarity pipeline.

    word_sim      Wu-Palmer between disambiguated senses, Jaro-Winkler fallback
    sentence_sim  set matching over the words of two sentences
    set_sim       set matching over two flattened parameter sets
    op_sim        weighted mean of input, output and name similarity
    service_sim   set matching over the operations of two services

Usage:
    from src.lexicon import load_wordnet
    from src.similarity import ServiceComparator
    from src.wsdl import parse_wsdl_file

    comparator = ServiceComparator(load_wordnet(wordnet_dir))
    score = comparator.service_sim(parse_wsdl_file("a.wsdl"), parse_wsdl_file("b.wsdl"))
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Sequence

from src import constants
from src.errors import ConfigError, EmptySentence
from src.hausdorff import directed_similarity, set_similarity
from src.lexicon import HIERARCHY_POS, Lexicon
from src.logger import logger
from src.text import StopwordList, default_stopwords, jaro_winkler, tokenize_identifier
from src.wsd import Context, SenseDisambiguator
from src.wsdl import FlattenedParamSet, OperationDef, ServiceDescription, flatten

Sentence = Sequence[str]


@dataclass(frozen=True)
class Weights:
    """Weights of input, output and name similarity in op_sim."""
    p1: float = constants.DEFAULT_WEIGHTS[0]
    p2: float = constants.DEFAULT_WEIGHTS[1]
    p3: float = constants.DEFAULT_WEIGHTS[2]

    def __post_init__(self):
        for value in (self.p1, self.p2, self.p3):
            if math.isnan(value) or value < 0:
                raise ConfigError(f"Weights must be non-negative numbers: {self.as_tuple()}")
        if self.total <= 0:
            raise ConfigError("At least one weight must be positive")

    @property
    def total(self) -> float:
        return self.p1 + self.p2 + self.p3

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.p1, self.p2, self.p3)

    @classmethod
    def parse(cls, text: str) -> Weights:
        """Parse ``"p1,p2,p3"``, e.g. ``"1,1,2"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ConfigError(f"Expected three comma-separated weights, got {text!r}")
        try:
            return cls(*(float(p) for p in parts))
        except ValueError:
            raise ConfigError(f"Invalid weights: {text!r}")


def combine_scores(input_sim: float, output_sim: float, name_sim: float, weights: Weights) -> float:
    """(p1*input + p2*output + p3*name) / (p1 + p2 + p3), summed in that order."""
    return (weights.p1 * input_sim + weights.p2 * output_sim + weights.p3 * name_sim) / weights.total


def _unique(items):
    return list(dict.fromkeys(items))


@dataclass(frozen=True)
class _FlatOperation:
    name: tuple[str, ...]
    input: FlattenedParamSet
    output: FlattenedParamSet


def build_context(f: _FlatOperation, g: _FlatOperation, stopwords: StopwordList) -> Context:
    """Union of both operations' name and parameter words, stopwords removed."""
    tokens = [*f.name, *f.input.tokens(), *f.output.tokens(), *g.name, *g.input.tokens(), *g.output.tokens()]
    return Context.from_tokens(tokens, stopwords)


class ServiceComparator:
    """
    Compares operations and services.

    Without a lexicon every word comparison is syntactic (Jaro-Winkler only).
    All scores are symmetric to the bit: word pairs are put in a fixed order
    before scoring, and both matching directions read the same matrix.
    """

    def __init__(
        self,
        lexicon: Lexicon | None = None,
        weights: Weights | None = None,
        stopwords: StopwordList | None = None,
        wsd_overlap_threshold: float = constants.DEFAULT_WSD_OVERLAP_THRESHOLD,
    ):
        self.lexicon = lexicon
        self.weights = weights or Weights()
        self.stopwords = stopwords if stopwords is not None else default_stopwords()
        self.disambiguator = (
            SenseDisambiguator(lexicon, self.stopwords, wsd_overlap_threshold) if lexicon is not None else None
        )
        self._flat_cache: dict[OperationDef, _FlatOperation] = {}
        self._word_cache: dict[tuple[str, str, frozenset[str]], float] = {}
        self._lock = threading.Lock()

    def __getstate__(self):
        state = self.__dict__.copy()
        del state["_lock"]
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.Lock()

    # ── Words and sentences ───────────────────────────────────────────────

    def word_sim(self, w1: str, w2: str, ctx: Context) -> float:
        if w1 == w2:
            return 1.0
        if w2 < w1:
            w1, w2 = w2, w1
        if self.lexicon is None:
            return jaro_winkler(w1, w2)

        key = (w1, w2, ctx.tokens)
        with self._lock:
            cached = self._word_cache.get(key)
        if cached is not None:
            return cached

        score = self._semantic_or_syntactic(w1, w2, ctx)
        with self._lock:
            self._word_cache[key] = score
        return score

    def _semantic_or_syntactic(self, w1: str, w2: str, ctx: Context) -> float:
        if not (self.lexicon.contains(w1) and self.lexicon.contains(w2)):
            return jaro_winkler(w1, w2)
        s1 = self.disambiguator.disambiguate(w1, ctx, HIERARCHY_POS)
        s2 = self.disambiguator.disambiguate(w2, ctx, HIERARCHY_POS)
        if s1 is None or s2 is None or s1.pos is not s2.pos:
            # adjective/adverb only, or noun against verb
            return jaro_winkler(w1, w2)
        return self.lexicon.wu_palmer(s1, s2)

    def sentence_sim(self, s1: Sentence, s2: Sentence, ctx: Context) -> float:
        if not s1 or not s2:
            raise EmptySentence("sentence similarity needs two nonempty sentences")
        return set_similarity(
            _unique(s1), _unique(s2), lambda a, b: self.word_sim(a, b, ctx), symmetric=True
        )

    def set_sim(self, e1: FlattenedParamSet, e2: FlattenedParamSet, ctx: Context) -> float:
        """1.0 for two empty sets, 0.0 when exactly one is empty."""
        if not e1 and not e2:
            return 1.0
        if not e1 or not e2:
            return 0.0
        return set_similarity(
            _unique(e1), _unique(e2), lambda a, b: self.sentence_sim(a, b, ctx), symmetric=True
        )

    # ── Operations and services ───────────────────────────────────────────

    def _flattened(self, op: OperationDef) -> _FlatOperation:
        with self._lock:
            cached = self._flat_cache.get(op)
        if cached is not None:
            return cached
        flat = _FlatOperation(
            name=tuple(tokenize_identifier(op.name)),
            input=flatten(op.input),
            output=flatten(op.output),
        )
        with self._lock:
            self._flat_cache[op] = flat
        return flat

    def context(self, f: OperationDef, g: OperationDef) -> Context:
        return build_context(self._flattened(f), self._flattened(g), self.stopwords)

    def name_sim(self, f: OperationDef, g: OperationDef, ctx: Context | None = None) -> float:
        ff, fg = self._flattened(f), self._flattened(g)
        if not ff.name and not fg.name:
            return 1.0
        if not ff.name or not fg.name:
            return 0.0
        ctx = ctx if ctx is not None else build_context(ff, fg, self.stopwords)
        return self.sentence_sim(ff.name, fg.name, ctx)

    def op_sim(self, f: OperationDef, g: OperationDef) -> float:
        ff, fg = self._flattened(f), self._flattened(g)
        ctx = build_context(ff, fg, self.stopwords)
        return combine_scores(
            self.set_sim(ff.input, fg.input, ctx),
            self.set_sim(ff.output, fg.output, ctx),
            self.name_sim(f, g, ctx),
            self.weights,
        )

    def clear_pair_caches(self) -> None:
        """Drop word scores and sense choices; both are keyed by an operation pair's context."""
        with self._lock:
            self._word_cache.clear()
        if self.disambiguator is not None:
            self.disambiguator.clear_decisions()

    def service_sim(self, ws1: ServiceDescription, ws2: ServiceDescription) -> float:
        try:
            score = set_similarity(ws1.operations, ws2.operations, self.op_sim, symmetric=True)
        finally:
            self.clear_pair_caches()
        logger.debug(f"service_sim({ws1.name}, {ws2.name}) = {score}")
        return score

    def directed_service_sim(self, ws1: ServiceDescription, ws2: ServiceDescription) -> float:
        """Mean best-match op_sim of ws1's operations against ws2's."""
        try:
            return directed_similarity(ws1.operations, ws2.operations, self.op_sim)
        finally:
            self.clear_pair_caches()


def op_sim(f: OperationDef, g: OperationDef, weights: Weights | None = None, lex: Lexicon | None = None) -> float:
    return ServiceComparator(lex, weights).op_sim(f, g)


def service_sim(
    ws1: ServiceDescription,
    ws2: ServiceDescription,
    weights: Weights | None = None,
    lex: Lexicon | None = None,
) -> float:
    return ServiceComparator(lex, weights).service_sim(ws1, ws2)
