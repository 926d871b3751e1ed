"""
Loader for the Princeton WordNet 3.x database files.

The ``dict`` folder is read through nltk's WordNetCorpusReader. Before the
folder is handed to nltk, every data record is checked to start at the byte
offset it declares and every index offset is checked to name a data record,
so a damaged database fails here instead of on some later lookup. All synsets
are then read once and their depths computed; the returned Lexicon is never
modified afterwards.

Usage:
    from src.lexicon import load_wordnet

    lex = load_wordnet("/usr/share/wordnet/dict")
    car = lex.lookup("car")[0]
"""

from __future__ import annotations

import re
import warnings
from pathlib import Path

from nltk.corpus.reader.wordnet import WordNetError
from tqdm import tqdm

from src.errors import DanglingOffset, HypernymCycle, MalformedRecord, MissingFile
from src.lexicon.model import POS_ORDER, PartOfSpeech, Synset, SynsetId
from src.lexicon.wordnet import Lexicon, open_reader
from src.logger import logger

REQUIRED_FILES = (
    "lexnames",
    *(f"data.{pos.file_suffix}" for pos in POS_ORDER),
    *(f"index.{pos.file_suffix}" for pos in POS_ORDER),
    *(f"{pos.file_suffix}.exc" for pos in POS_ORDER),
)

# nltk reports parse failures as "file index.noun, line 12: ..."
_NLTK_LOCATION = re.compile(r"file (\S+), line (\d+)")
# and unreadable pointers as "... pos=n at offset=12345."
_NLTK_TARGET = re.compile(r"pos=(\w) at offset=(\d+)")

_READER_ERRORS = (WordNetError, AssertionError, ValueError, KeyError, IndexError, StopIteration)


def _bar(iterable, desc: str, show_progress: bool, **kwargs):
    return tqdm(iterable, desc=desc, unit=" lines", disable=not show_progress, leave=False, **kwargs)


# ── Structural checks ─────────────────────────────────────────────────────

def _record_offsets(path: Path, show_progress: bool) -> dict[int, int]:
    """Byte offset -> line number of every data record."""
    offsets = {}
    position = 0
    with open(path, "rb") as f:
        for line_no, line in enumerate(_bar(f, path.name, show_progress), 1):
            start, position = position, position + len(line)
            # license lines start with a space
            if line[:1].isspace() or not line.strip():
                continue
            head = line.split(maxsplit=1)[0]
            if not head.isdigit() or int(head) != start:
                raise MalformedRecord(
                    path, line_no,
                    f"record declares offset {head.decode(errors='replace')} but starts at byte {start}",
                )
            offsets[start] = line_no
    return offsets


def _check_index(path: Path, pos: PartOfSpeech, records: dict[int, int], show_progress: bool) -> int:
    lemmas = 0
    with open(path, encoding="utf-8", errors="replace") as f:
        for line_no, line in enumerate(_bar(f, path.name, show_progress), 1):
            if line.startswith(" ") or not line.strip():
                continue
            fields = line.split()
            try:
                count = int(fields[2])
                offsets = [int(token) for token in fields[-count:]] if count > 0 else []
            except (IndexError, ValueError) as e:
                raise MalformedRecord(path, line_no, str(e)) from e
            for offset in offsets:
                if offset not in records:
                    raise DanglingOffset(pos.value, offset, referrer=f"{path.name}:{line_no} '{fields[0]}'")
            lemmas += 1
    return lemmas


def _malformed(directory: Path, error: Exception) -> MalformedRecord:
    detail = str(error) or type(error).__name__
    match = _NLTK_LOCATION.search(detail)
    if match:
        return MalformedRecord(directory / match[1], int(match[2]), detail)
    return MalformedRecord(directory, 0, detail)


def _dangling(referrer: str, messages: list[str]) -> DanglingOffset:
    for message in messages:
        match = _NLTK_TARGET.search(message)
        if match:
            return DanglingOffset(match[1], int(match[2]), referrer=referrer)
    return DanglingOffset("?", 0, referrer=referrer)


# ── Synsets ───────────────────────────────────────────────────────────────

def _parents(entry) -> tuple[SynsetId, ...]:
    """Hypernym and instance-hypernym ids of an nltk synset; a missing target is an error."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            parents = entry.hypernyms() + entry.instance_hypernyms()
        except (WordNetError, AttributeError, TypeError, ValueError, OSError) as e:
            raise _dangling(entry.name(), [str(e)] + [str(w.message) for w in caught]) from e
    if any(parent is None for parent in parents):
        raise _dangling(entry.name(), [str(w.message) for w in caught])
    return tuple(SynsetId(PartOfSpeech.from_tag(p.pos()), p.offset()) for p in parents)


def _depths(entry) -> tuple[int, int]:
    """(shortest, longest) root path length, roots counting 1."""
    try:
        return entry.min_depth() + 1, entry.max_depth() + 1
    except RecursionError as e:
        raise HypernymCycle(f"Hypernym cycle through synset {entry.name()}") from e


def load_wordnet(directory: str | Path, show_progress: bool = False) -> Lexicon:
    """
    Load a WordNet database directory into a Lexicon.

    Args:
        directory: Folder holding lexnames, index.*, data.* and *.exc (the WordNet ``dict`` folder)
        show_progress: Display a tqdm bar per file

    Returns:
        Immutable Lexicon

    Raises:
        MissingFile, MalformedRecord, DanglingOffset, HypernymCycle
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise MissingFile(directory)
    for name in REQUIRED_FILES:
        if not (directory / name).is_file():
            raise MissingFile(directory / name)

    records = {
        pos: _record_offsets(directory / f"data.{pos.file_suffix}", show_progress) for pos in POS_ORDER
    }
    lemmas = sum(
        _check_index(directory / f"index.{pos.file_suffix}", pos, records[pos], show_progress)
        for pos in POS_ORDER
    )

    try:
        reader = open_reader(directory)
    except _READER_ERRORS as e:
        raise _malformed(directory, e) from e

    synsets: dict[SynsetId, Synset] = {}
    max_depths: dict[SynsetId, int] = {}
    for pos in POS_ORDER:
        path = directory / f"data.{pos.file_suffix}"
        for offset, line_no in _bar(records[pos].items(), f"synsets.{pos.file_suffix}", show_progress):
            try:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    entry = reader.synset_from_pos_and_offset(pos.value, offset)
            except _READER_ERRORS as e:
                raise MalformedRecord(path, line_no, str(e) or type(e).__name__) from e
            if entry is None:
                raise MalformedRecord(path, line_no, "record could not be read")

            sid = SynsetId(pos, offset)
            if pos.has_hierarchy:
                hypernyms = _parents(entry)
                depth, max_depths[sid] = _depths(entry)
            else:
                hypernyms, depth, max_depths[sid] = (), 1, 1
            synsets[sid] = Synset(
                id=sid,
                name=entry.name(),
                words=tuple(name.lower() for name in entry.lemma_names()),
                gloss=entry.definition(),
                examples=tuple(entry.examples()),
                hypernyms=hypernyms,
                depth=depth,
            )

    logger.info(f"Loaded WordNet from {directory}: {len(synsets)} synsets, {lemmas} lemmas")
    return Lexicon(directory, synsets, max_depths, reader=reader)
