"""
Synset records as read from a WordNet database.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple


class PartOfSpeech(str, Enum):
    NOUN = "n"
    VERB = "v"
    ADJ = "a"
    ADV = "r"

    @classmethod
    def from_tag(cls, tag: str) -> PartOfSpeech:
        """Map a WordNet ss_type; adjective satellites ('s') count as adjectives."""
        if tag == "s":
            return cls.ADJ
        return cls(tag)

    @property
    def file_suffix(self) -> str:
        return _FILE_SUFFIXES[self]

    @property
    def has_hierarchy(self) -> bool:
        return self in (PartOfSpeech.NOUN, PartOfSpeech.VERB)


_FILE_SUFFIXES = {
    PartOfSpeech.NOUN: "noun",
    PartOfSpeech.VERB: "verb",
    PartOfSpeech.ADJ: "adj",
    PartOfSpeech.ADV: "adv",
}

# Order in which senses of an unfiltered lookup are listed
POS_ORDER = (PartOfSpeech.NOUN, PartOfSpeech.VERB, PartOfSpeech.ADJ, PartOfSpeech.ADV)

# Senses usable by Wu-Palmer
HIERARCHY_POS = (PartOfSpeech.NOUN, PartOfSpeech.VERB)


class SynsetId(NamedTuple):
    pos: PartOfSpeech
    offset: int

    def __str__(self) -> str:
        return f"{self.offset:08d}-{self.pos.value}"


@dataclass(frozen=True)
class Synset:
    """
    One sense: member lemmas, definition, usage examples and hypernym links.

    ``name`` is WordNet's sense name (``dog.n.01``). ``depth`` is 1 for a root
    and 1 + the smallest hypernym depth otherwise.
    """
    id: SynsetId
    name: str
    words: tuple[str, ...]
    gloss: str
    examples: tuple[str, ...] = ()
    hypernyms: tuple[SynsetId, ...] = ()
    depth: int = 1

    @property
    def pos(self) -> PartOfSpeech:
        return self.id.pos

    @property
    def offset(self) -> int:
        return self.id.offset

    def __str__(self) -> str:
        return self.name
