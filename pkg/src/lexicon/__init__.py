from src.lexicon.loader import load_wordnet
from src.lexicon.model import HIERARCHY_POS, POS_ORDER, PartOfSpeech, Synset, SynsetId
from src.lexicon.wordnet import Lexicon

__all__ = [
    "HIERARCHY_POS",
    "POS_ORDER",
    "Lexicon",
    "PartOfSpeech",
    "Synset",
    "SynsetId",
    "load_wordnet",
    "lookup",
    "contains",
    "wu_palmer",
]


def lookup(lex: Lexicon, lemma: str, pos_filter=None) -> list[Synset]:
    return lex.lookup(lemma, pos_filter)


def contains(lex: Lexicon, lemma: str) -> bool:
    return lex.contains(lemma)


def wu_palmer(lex: Lexicon, s1: Synset, s2: Synset) -> float:
    return lex.wu_palmer(s1, s2)
