"""
Output of evaluation reports as JSON, CSV or a rich table.
"""

from __future__ import annotations

import csv
import io
import json

from rich.console import Console
from rich.table import Table

from src.evaluation.report import EvalReport, mean_of

PAIR_COLUMNS = ("domain", "service_a", "service_b", "score", "predicted", "expert", "error")


def report_to_json(reports: dict[str, EvalReport]) -> str:
    data = {
        "domains": [report.to_dict() for report in reports.values()],
        "mean": mean_of(reports.values()),
    }
    return json.dumps(data, indent=2)


def report_to_csv(reports: dict[str, EvalReport]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(PAIR_COLUMNS)
    for report in reports.values():
        for pair in report.per_pair:
            writer.writerow([
                pair.domain, pair.service_a, pair.service_b, repr(pair.score),
                pair.predicted.value, pair.expert.value, repr(pair.error),
            ])
    return out.getvalue()


def print_eval_report(reports: dict[str, EvalReport], console: Console | None = None) -> None:
    """Print one table per domain followed by the aggregate figures."""
    console = console or Console()
    for name, report in reports.items():
        table = Table(title=f"Domain: {name}" if name else "Evaluation")
        table.add_column("Pair")
        table.add_column("Expert")
        table.add_column("Score", justify="right")
        table.add_column("Predicted")
        table.add_column("Error", justify="right")
        for pair in report.per_pair:
            style = None if pair.error == 0 else "yellow"
            table.add_row(
                f"{pair.service_a} / {pair.service_b}",
                pair.expert.label,
                f"{pair.score:.4f}",
                pair.predicted.label,
                f"{pair.error:.4f}",
                style=style,
            )
        console.print(table)
        console.print(
            f"  Error ≈ {report.domain_error:.2%}   bucket accuracy {report.bucket_accuracy:.2%}   "
            f"precision {report.precision:.2%}   recall {report.recall:.2%} "
            f"(threshold {report.positive_threshold})"
        )
        console.print()

    if len(reports) > 1:
        mean = mean_of(reports.values())
        console.print(
            f"[bold]Mean over {len(reports)} domains:[/bold] error {mean['domain_error']:.2%}, "
            f"accuracy {mean['bucket_accuracy']:.2%}, precision {mean['precision']:.2%}, "
            f"recall {mean['recall']:.2%}"
        )
