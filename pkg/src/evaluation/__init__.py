from src.evaluation.buckets import BUCKET_BOUNDS, Bucket, bucketize, pair_error
from src.evaluation.label_files import (
    ExpertLabelSet,
    LabelEntry,
    pair_key,
    read_labels,
    read_replay,
)
from src.evaluation.render import print_eval_report, report_to_csv, report_to_json
from src.evaluation.report import (
    DEFAULT_POSITIVE_LABELS,
    EvalReport,
    PairResult,
    classification_report,
    domain_error,
    evaluate_by_domain,
    mean_of,
)

__all__ = [
    "BUCKET_BOUNDS",
    "Bucket",
    "DEFAULT_POSITIVE_LABELS",
    "EvalReport",
    "ExpertLabelSet",
    "LabelEntry",
    "PairResult",
    "bucketize",
    "classification_report",
    "domain_error",
    "evaluate_by_domain",
    "mean_of",
    "pair_error",
    "pair_key",
    "print_eval_report",
    "read_labels",
    "read_replay",
    "report_to_csv",
    "report_to_json",
]
