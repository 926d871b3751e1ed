"""
Expert label and replay CSV files.

    labels.csv   service_a,service_b,label[,domain]
    replay.csv   service_a,service_b,score,label[,domain]

Pairs are unordered: (a, b) and (b, a) name the same pair.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from src.errors import EmptyList, LabelFormatError
from src.evaluation.buckets import Bucket
from src.logger import logger

PairKey = tuple[str, str, str]

LABEL_COLUMNS = ("service_a", "service_b", "label")
REPLAY_COLUMNS = ("service_a", "service_b", "score", "label")


def pair_key(a: str, b: str, domain: str = "") -> PairKey:
    """Order-free key of a labelled pair."""
    return (domain, a, b) if a <= b else (domain, b, a)


@dataclass(frozen=True)
class LabelEntry:
    service_a: str
    service_b: str
    label: Bucket
    domain: str = ""

    @property
    def key(self) -> PairKey:
        return pair_key(self.service_a, self.service_b, self.domain)


class ExpertLabelSet:
    """Expert judgements, at most one per unordered pair and domain."""

    def __init__(self, entries: Iterable[LabelEntry]):
        self.entries: tuple[LabelEntry, ...] = tuple(entries)
        seen: set[PairKey] = set()
        for entry in self.entries:
            if entry.key in seen:
                raise LabelFormatError(
                    f"Duplicate label for pair {entry.service_a} / {entry.service_b}"
                    + (f" in domain {entry.domain}" if entry.domain else "")
                )
            seen.add(entry.key)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[LabelEntry]:
        return iter(self.entries)

    def domains(self) -> list[str]:
        return list(dict.fromkeys(entry.domain for entry in self.entries))

    def for_domain(self, domain: str) -> ExpertLabelSet:
        return ExpertLabelSet(e for e in self.entries if e.domain == domain)


def _rows(path: Path, required: tuple[str, ...]) -> Iterator[tuple[int, dict]]:
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        columns = [c.strip() for c in (reader.fieldnames or [])]
        missing = [c for c in required if c not in columns]
        if missing:
            raise LabelFormatError(f"{path}: missing column(s) {', '.join(missing)}")
        for row in reader:
            row = {k.strip(): (v or "").strip() for k, v in row.items() if k is not None}
            if not any(row.values()):
                continue
            yield reader.line_num, row


def _entry(path: Path, line_no: int, row: dict) -> LabelEntry:
    if not row["service_a"] or not row["service_b"]:
        raise LabelFormatError(f"{path}:{line_no}: empty service id")
    try:
        label = Bucket.parse(row["label"])
    except LabelFormatError as e:
        raise LabelFormatError(f"{path}:{line_no}: {e}") from e
    return LabelEntry(row["service_a"], row["service_b"], label, row.get("domain", ""))


def read_labels(path: str | Path) -> ExpertLabelSet:
    """
    Read an expert label file.

    Raises:
        LabelFormatError: missing column, unknown label or duplicate pair
        EmptyList: the file holds no labelled pair
    """
    path = Path(path)
    entries = [_entry(path, line_no, row) for line_no, row in _rows(path, LABEL_COLUMNS)]
    if not entries:
        raise EmptyList(f"{path}: no labelled pairs")
    logger.info(f"Loaded {len(entries)} expert labels from {path}")
    return ExpertLabelSet(entries)


def read_replay(path: str | Path) -> tuple[ExpertLabelSet, dict[PairKey, float]]:
    """
    Read published (score, label) pairs so they can be evaluated without WSDLs.

    Returns:
        (labels, scores keyed by pair_key)
    """
    path = Path(path)
    entries: list[LabelEntry] = []
    scores: dict[PairKey, float] = {}
    for line_no, row in _rows(path, REPLAY_COLUMNS):
        entry = _entry(path, line_no, row)
        try:
            scores[entry.key] = float(row["score"])
        except ValueError:
            raise LabelFormatError(f"{path}:{line_no}: invalid score {row['score']!r}")
        entries.append(entry)
    if not entries:
        raise EmptyList(f"{path}: no replay rows")
    logger.info(f"Loaded {len(entries)} replay rows from {path}")
    return ExpertLabelSet(entries), scores
