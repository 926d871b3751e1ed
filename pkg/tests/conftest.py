"""
Shared fixtures: a miniature WordNet database, the synthetic WSDL corpus and
the bundled stopword list.

The miniature database is written in the Princeton file format (license
header, lexnames, index/data files with byte offsets, exception lists) so the
real loader and nltk's reader are exercised end to end.
"""

import os
from pathlib import Path

import nltk
import pytest

from src import constants
from src.lexicon import load_wordnet
from src.text import default_stopwords

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS_DIR = FIXTURES / "corpus"

LICENSE_HEADER = (
    "  1 This software and database is being provided to you, the LICENSEE, by\n"
    "  2 a miniature test fixture shaped like the Princeton WordNet files.\n"
    "  3 WordNet 3.0 Copyright 2006 by Princeton University.  All rights reserved.\n"
)

# index, name, filenum; data records below use file 03
LEXNAMES = "00\tadj.all\t3\n01\tadj.pert\t3\n02\tadv.all\t4\n03\tnoun.Tops\t1\n04\tverb.body\t2\n"

# key, pos, words, hypernym keys, gloss
# Sense order of a lemma follows the order of this table.
MINI_SYNSETS = [
    ("entity", "n", ["entity"], [], "that which is perceived or known or inferred to have its own distinct existence"),
    ("physical_entity", "n", ["physical_entity"], ["entity"], "an entity that has physical existence"),
    ("abstraction", "n", ["abstraction"], ["entity"], "a general concept formed by extracting common features"),
    ("object", "n", ["object"], ["physical_entity"], "a tangible and visible entity"),
    ("whole", "n", ["whole"], ["object"], "an assemblage of parts that is regarded as a single entity"),
    ("living_thing", "n", ["living_thing"], ["whole"], "a living entity"),
    ("organism", "n", ["organism", "being"], ["living_thing"], "a living thing that can act or function independently"),
    ("animal", "n", ["animal", "beast"], ["organism"], "a living organism characterized by voluntary movement"),
    ("carnivore", "n", ["carnivore"], ["animal"], "a terrestrial or aquatic flesh-eating mammal"),
    ("canine", "n", ["canine"], ["carnivore"], "any of various fissiped mammals with nonretractile claws"),
    ("feline", "n", ["feline"], ["carnivore"], "any of various lithe-bodied roundheaded fissiped mammals"),
    ("domestic_animal", "n", ["domestic_animal"], ["animal"], "any of various animals that have been tamed"),
    ("dog", "n", ["dog", "domestic_dog"], ["canine", "domestic_animal"], "a member of the genus Canis; \"the dog barked all night\""),
    ("cat", "n", ["cat", "true_cat"], ["feline"], "feline mammal usually having thick soft fur"),
    ("mouse", "n", ["mouse"], ["animal"], "any of numerous small rodents typically resembling diminutive rats"),
    ("person", "n", ["person", "individual"], ["organism"], "a human being"),
    ("author", "n", ["writer", "author"], ["person"], "writes professionally"),
    ("artifact", "n", ["artifact"], ["whole"], "a man-made object taken as a whole"),
    ("car", "n", ["car", "auto", "automobile"], ["artifact"], "a motor vehicle with four wheels"),
    ("location", "n", ["location"], ["physical_entity"], "a point or extent in space"),
    ("city", "n", ["city", "metropolis"], ["location"], "a large and densely populated urban area"),
    ("town", "n", ["town"], ["location"], "an urban area with a fixed boundary that is smaller than a city"),
    ("bank_land", "n", ["bank"], ["location"], "sloping land beside a body of water; \"they sat on the river bank\""),
    ("bank_finance", "n", ["depository_financial_institution", "bank"], ["abstraction"],
     "a financial institution that accepts deposits and channels the money into lending activities"),
    ("weather", "n", ["weather", "weather_condition"], ["abstraction"],
     "the atmospheric conditions that comprise the state of the atmosphere"),
    ("temperature", "n", ["temperature"], ["abstraction"], "the degree of hotness or coldness of a body"),
    ("forecast_n", "n", ["forecast", "prognosis"], ["abstraction"], "a prediction about how something will develop"),
    ("message", "n", ["message", "content"], ["abstraction"], "what a communication is about"),
    ("book", "n", ["book"], ["abstraction"], "a written work or composition that has been published"),
    ("title", "n", ["title"], ["abstraction"], "the name of a work of art or literary composition"),
    ("search_n", "n", ["search", "hunt"], ["abstraction"], "the activity of looking thoroughly to find something"),
    ("transfer", "v", ["transfer"], [], "move from one place to another"),
    ("send", "v", ["send", "transmit"], ["transfer"], "cause to be directed or transmitted to another place"),
    ("get", "v", ["get", "acquire"], [], "come into the possession of something concrete or abstract"),
    ("search_v", "v", ["search", "look"], [], "try to locate or discover"),
    ("forecast_v", "v", ["forecast", "predict"], [], "predict in advance"),
    ("free", "a", ["free"], [], "able to act at will; not hampered"),
    ("gratis", "s", ["gratis", "free"], [], "costing nothing"),
    ("quickly", "r", ["quickly", "speedily"], [], "with rapid movements"),
]

MINI_EXCEPTIONS = {
    "noun": ["mice mouse", "geese goose"],
    "verb": ["sent send"],
    "adj": ["freer free"],
}

# similar-to links between an adjective head and its satellite
MINI_SIMILAR = {"gratis": "free", "free": "gratis"}

_POS_SUFFIX = {"n": "noun", "v": "verb", "a": "adj", "s": "adj", "r": "adv"}
_FILE_POS = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}


def _data_line(offset: int, pos: str, words: list[str], pointers: list[tuple[str, int, str]], gloss: str) -> str:
    word_part = " ".join(f"{w} 0" for w in words)
    ptr_part = "".join(f" {sym} {target:08d} {tpos} 0000" for sym, target, tpos in pointers)
    return f"{offset:08d} 03 {pos} {len(words):02x} {word_part} {len(pointers):03d}{ptr_part} | {gloss}  \n"


def _pointers(key: str, offsets: dict[str, int]) -> list[tuple[str, int, str]]:
    """Hypernym pointers of *key*, a hyponym pointer back from each parent and similar-to links."""
    entry = next(e for e in MINI_SYNSETS if e[0] == key)
    pointers = [("@", offsets[parent], entry[1]) for parent in entry[3]]
    if key in MINI_SIMILAR:
        other = next(e for e in MINI_SYNSETS if e[0] == MINI_SIMILAR[key])
        pointers.append(("&", offsets[other[0]], other[1]))
    for child_key, _, _, parents, _ in MINI_SYNSETS:
        if key in parents:
            pointers.append(("~", offsets[child_key], entry[1]))
    return pointers


def write_mini_wordnet(directory: Path) -> Path:
    """Write lexnames, index.*, data.* and *.exc files; offsets are real byte positions."""
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "lexnames").write_text(LEXNAMES, encoding="utf-8")
    by_file: dict[str, list] = {suffix: [] for suffix in _FILE_POS}
    for entry in MINI_SYNSETS:
        by_file[_POS_SUFFIX[entry[1]]].append(entry)

    # line lengths do not depend on offset values (always eight digits)
    placeholder = {entry[0]: 0 for entry in MINI_SYNSETS}
    offsets: dict[str, int] = {}
    for suffix, entries in by_file.items():
        position = len(LICENSE_HEADER.encode())
        for key, pos, words, _, gloss in entries:
            offsets[key] = position
            position += len(_data_line(0, pos, words, _pointers(key, placeholder), gloss).encode())

    index: dict[str, dict[str, list[int]]] = {suffix: {} for suffix in _FILE_POS}
    for suffix, entries in by_file.items():
        lines = []
        for key, pos, words, _, gloss in entries:
            lines.append(_data_line(offsets[key], pos, words, _pointers(key, offsets), gloss))
            for word in words:
                index[suffix].setdefault(word.lower(), []).append(offsets[key])
        (directory / f"data.{suffix}").write_text(LICENSE_HEADER + "".join(lines), encoding="utf-8")

    for suffix, lemmas in index.items():
        pos = _FILE_POS[suffix]
        lines = [
            f"{lemma} {pos} {len(ids)} 1 @ {len(ids)} 0 " + " ".join(f"{o:08d}" for o in ids) + "  \n"
            for lemma, ids in sorted(lemmas.items())
        ]
        (directory / f"index.{suffix}").write_text(LICENSE_HEADER + "".join(lines), encoding="utf-8")

    for suffix in _FILE_POS:
        lines = MINI_EXCEPTIONS.get(suffix, [])
        (directory / f"{suffix}.exc").write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")
    return directory


def append_synsets(directory: Path, suffix: str, entries: list[tuple[str, str | int]]) -> dict[str, int]:
    """
    Append one-word synsets to data.<suffix> at their real byte offsets and index them.

    Each entry is (lemma, hypernym): a str hypernym names another appended
    lemma, an int is written as a raw offset.
    """
    pos = _FILE_POS[suffix]
    data_path = directory / f"data.{suffix}"
    position = data_path.stat().st_size
    offsets: dict[str, int] = {}
    for lemma, _ in entries:
        offsets[lemma] = position
        position += len(_data_line(0, pos, [lemma], [("@", 0, pos)], f"test record {lemma}").encode())

    with open(data_path, "a", encoding="utf-8") as f:
        for lemma, hypernym in entries:
            target = offsets[hypernym] if isinstance(hypernym, str) else hypernym
            f.write(_data_line(offsets[lemma], pos, [lemma], [("@", target, pos)], f"test record {lemma}"))
    with open(directory / f"index.{suffix}", "a", encoding="utf-8") as f:
        for lemma, offset in offsets.items():
            f.write(f"{lemma} {pos} 1 1 @ 1 0 {offset:08d}  \n")
    return offsets


@pytest.fixture(scope="session", autouse=True)
def _nltk_trusts_tmp(tmp_path_factory):
    # nltk's path security rejects corpora outside its data roots; the test
    # lexicons live under pytest's temp base, so register it as a root.
    root = str(tmp_path_factory.getbasetemp())
    nltk.data.path.append(root)
    yield
    nltk.data.path.remove(root)


@pytest.fixture(scope="session")
def wordnet_dir(tmp_path_factory):
    return write_mini_wordnet(tmp_path_factory.mktemp("wordnet"))


@pytest.fixture(scope="session")
def lexicon(wordnet_dir):
    return load_wordnet(wordnet_dir)


@pytest.fixture(scope="session")
def real_wordnet():
    directory = os.environ.get(constants.WORDNET_ENV_VAR)
    if not directory or not Path(directory, "data.noun").exists():
        pytest.skip(f"set {constants.WORDNET_ENV_VAR} to a WordNet 3.0 dict folder")
    return load_wordnet(directory)


@pytest.fixture(scope="session")
def stopwords():
    return default_stopwords()


@pytest.fixture
def corpus_dir():
    return CORPUS_DIR
