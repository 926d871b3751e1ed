"""
Expert similarity categories and per-pair error.
"""

from __future__ import annotations

import math
import re
from enum import Enum

from src.errors import LabelFormatError, OutOfRange


class Bucket(str, Enum):
    DISSIMILAR = "dissimilar"
    LITTLE_SIMILAR = "little_similar"
    AVERAGELY_SIMILAR = "averagely_similar"
    VERY_SIMILAR = "very_similar"
    IDENTIC = "identic"

    @property
    def bounds(self) -> tuple[float, float]:
        return BUCKET_BOUNDS[self]

    @property
    def label(self) -> str:
        """Human form, e.g. 'Very similar'."""
        return self.value.replace("_", " ").capitalize()

    @classmethod
    def parse(cls, text: str) -> Bucket:
        """
        Accept the bucket names in any case with spaces, hyphens or underscores:
        'Very similar', 'very-similar' and 'VERY_SIMILAR' all parse.
        """
        key = re.sub(r"[\s\-]+", "_", text.strip().lower())
        key = _ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise LabelFormatError(f"Unknown similarity label: {text!r}")


# [lo, hi) except identic, which is closed
BUCKET_BOUNDS = {
    Bucket.DISSIMILAR: (0.0, 0.2),
    Bucket.LITTLE_SIMILAR: (0.2, 0.5),
    Bucket.AVERAGELY_SIMILAR: (0.5, 0.7),
    Bucket.VERY_SIMILAR: (0.7, 0.9),
    Bucket.IDENTIC: (0.9, 1.0),
}

_ALIASES = {
    "identical": "identic",
    "not_similar": "dissimilar",
    "average_similar": "averagely_similar",
}


def _check_score(score: float) -> None:
    if math.isnan(score) or not 0.0 <= score <= 1.0:
        raise OutOfRange(f"Score {score} is outside [0, 1]")


def bucketize(score: float) -> Bucket:
    """Bucket containing *score*; 0.2, 0.5, 0.7 and 0.9 open the next bucket."""
    _check_score(score)
    for bucket, (lo, hi) in BUCKET_BOUNDS.items():
        if lo <= score < hi:
            return bucket
    return Bucket.IDENTIC


def pair_error(score: float, expert: Bucket) -> float:
    """
    Distance from *score* to the expert's interval, 0 inside it.

    The interval is taken closed here so the error is continuous:
    pair_error(0.7, AVERAGELY_SIMILAR) == 0.
    """
    _check_score(score)
    lo, hi = expert.bounds
    if score < lo:
        return lo - score
    if score > hi:
        return score - hi
    return 0.0
