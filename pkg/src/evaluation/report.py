"""
Evaluation reports: per-pair errors, domain error, bucket accuracy and
binary precision/recall against expert labels.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable, Mapping

from src import constants
from src.errors import EmptyList, MissingScore, UnknownServiceId
from src.evaluation.buckets import Bucket, bucketize, pair_error
from src.evaluation.label_files import ExpertLabelSet, PairKey

DEFAULT_POSITIVE_LABELS = frozenset({
    Bucket.AVERAGELY_SIMILAR,
    Bucket.VERY_SIMILAR,
    Bucket.IDENTIC,
})


@dataclass(frozen=True)
class PairResult:
    service_a: str
    service_b: str
    score: float
    predicted: Bucket
    expert: Bucket
    error: float
    domain: str = ""

    @property
    def correct(self) -> bool:
        return self.predicted is self.expert


@dataclass
class EvalReport:
    """Comparison of computed scores with expert labels for one domain (or all)."""
    per_pair: list[PairResult] = field(default_factory=list)
    domain_error: float = 0.0
    bucket_accuracy: float = 0.0
    precision: float = 1.0
    recall: float = 1.0
    domain: str = ""
    positive_threshold: float = constants.DEFAULT_POSITIVE_THRESHOLD

    def to_dict(self) -> dict:
        data = asdict(self)
        for pair in data["per_pair"]:
            pair["predicted"] = pair["predicted"].value
            pair["expert"] = pair["expert"].value
        return data


def domain_error(errors: Iterable[float]) -> float:
    """Mean per-pair error."""
    errors = list(errors)
    if not errors:
        raise EmptyList("domain error of an empty list")
    return sum(errors) / len(errors)


def _ratio(numerator: int, denominator: int) -> float:
    # nothing to get wrong counts as perfect
    return numerator / denominator if denominator else 1.0


def classification_report(
    labels: ExpertLabelSet,
    scores: Mapping[PairKey, float],
    positive_labels: Iterable[Bucket] = DEFAULT_POSITIVE_LABELS,
    threshold: float = constants.DEFAULT_POSITIVE_THRESHOLD,
    known_ids: set[str] | None = None,
    domain: str = "",
) -> EvalReport:
    """
    Score every labelled pair.

    Args:
        labels: Expert judgements
        scores: Computed similarity per pair_key
        positive_labels: Expert buckets counted as "similar"
        threshold: Scores at or above this are predicted similar
        known_ids: Service ids that exist; None skips the check
        domain: Name recorded on the report

    Raises:
        EmptyList, UnknownServiceId, MissingScore
    """
    if not len(labels):
        raise EmptyList("no labelled pairs to evaluate")
    positives = frozenset(positive_labels)

    results: list[PairResult] = []
    tp = fp = fn = 0
    for entry in labels:
        if known_ids is not None:
            for service_id in (entry.service_a, entry.service_b):
                if service_id not in known_ids:
                    raise UnknownServiceId(f"Unknown service id in labels: {service_id}")
        if entry.key not in scores:
            raise MissingScore(f"No score for pair {entry.service_a} / {entry.service_b}")

        score = scores[entry.key]
        results.append(PairResult(
            service_a=entry.service_a,
            service_b=entry.service_b,
            score=score,
            predicted=bucketize(score),
            expert=entry.label,
            error=pair_error(score, entry.label),
            domain=entry.domain,
        ))

        predicted_positive = score >= threshold
        actual_positive = entry.label in positives
        if predicted_positive and actual_positive:
            tp += 1
        elif predicted_positive:
            fp += 1
        elif actual_positive:
            fn += 1

    return EvalReport(
        per_pair=results,
        domain_error=domain_error(r.error for r in results),
        bucket_accuracy=sum(r.correct for r in results) / len(results),
        precision=_ratio(tp, tp + fp),
        recall=_ratio(tp, tp + fn),
        domain=domain,
        positive_threshold=threshold,
    )


def evaluate_by_domain(
    labels: ExpertLabelSet,
    scores: Mapping[PairKey, float],
    **kwargs,
) -> dict[str, EvalReport]:
    """One report per domain column value, in file order."""
    return {
        domain: classification_report(labels.for_domain(domain), scores, domain=domain, **kwargs)
        for domain in labels.domains()
    }


def mean_of(reports: Iterable[EvalReport]) -> dict[str, float]:
    """Average domain error, accuracy, precision and recall over reports."""
    reports = list(reports)
    if not reports:
        raise EmptyList("no reports to average")
    n = len(reports)
    return {
        "domain_error": sum(r.domain_error for r in reports) / n,
        "bucket_accuracy": sum(r.bucket_accuracy for r in reports) / n,
        "precision": sum(r.precision for r in reports) / n,
        "recall": sum(r.recall for r in reports) / n,
    }
