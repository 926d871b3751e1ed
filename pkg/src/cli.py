"""
Command-line interface.

    wssim sim A.wsdl B.wsdl
    wssim matrix DIR [--out matrix.json]
    wssim rank TARGET.wsdl DIR [--top K]
    wssim eval DIR labels.csv
    wssim eval --replay data/replay/weather.csv [--replay ...]

Global flags (accepted after the subcommand) override config.json and the
environment. Exit codes: 0 success, 2 input error, 3 environment error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np
from rich.console import Console
from rich.table import Table

from src import constants
from src.batch import score_pairs
from src.config import OUTPUT_FORMATS, RunConfig, resolve_run_config
from src.errors import ConfigError, LexiconError, WsdlError, WsSimError
from src.evaluation import (
    bucketize,
    evaluate_by_domain,
    pair_key,
    print_eval_report,
    read_labels,
    read_replay,
    report_to_csv,
    report_to_json,
)
from src.lexicon import Lexicon, load_wordnet
from src.logger import logger
from src.similarity import ServiceComparator, Weights
from src.text import load_stopwords
from src.wsdl import ServiceDescription, parse_wsdl_file


# ── Shared helpers ────────────────────────────────────────────────────────

def _show_progress() -> bool:
    return sys.stderr.isatty()


def _load_lexicon(cfg: RunConfig) -> Lexicon:
    if cfg.wordnet_dir is None:
        raise LexiconError(
            f"no WordNet directory given (use --wordnet-dir or set {constants.WORDNET_ENV_VAR})"
        )
    return load_wordnet(cfg.wordnet_dir, show_progress=_show_progress())


def _comparator(cfg: RunConfig) -> ServiceComparator:
    return ServiceComparator(
        lexicon=_load_lexicon(cfg),
        weights=Weights(*cfg.weights),
        stopwords=load_stopwords(cfg.stopword_file),
        wsd_overlap_threshold=cfg.wsd_overlap_threshold,
    )


def _parse(path: str | Path, cfg: RunConfig) -> ServiceDescription:
    return parse_wsdl_file(path, max_depth=cfg.max_depth, allow_network=cfg.allow_network)


def _scan_dir(directory: str | Path, cfg: RunConfig) -> list[tuple[str, ServiceDescription]]:
    """(file stem, service) for every parseable WSDL in *directory*, sorted by file name."""
    directory = Path(directory)
    if not directory.is_dir():
        raise NotADirectoryError(f"Not a directory: {directory}")
    files = sorted(
        (p for p in directory.iterdir() if p.is_file() and p.suffix.lower() in constants.WSDL_EXTENSIONS),
        key=lambda p: p.name,
    )
    services = []
    skipped = 0
    for path in files:
        try:
            services.append((path.stem, _parse(path, cfg)))
        except (WsdlError, OSError) as e:
            logger.warning(f"Skipping {path.name}: {e}")
            skipped += 1
    logger.info(f"Parsed {len(services)} services from {directory} ({skipped} skipped)")
    return services


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _print_table(table: Table, out: str | None = None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as f:
            Console(file=f, width=120).print(table)
        logger.info(f"Wrote {out}")
    else:
        Console().print(table)


# ── Commands ──────────────────────────────────────────────────────────────

def cmd_sim(args, cfg: RunConfig) -> int:
    ws1 = _parse(args.wsdl_a, cfg)
    ws2 = _parse(args.wsdl_b, cfg)
    comparator = _comparator(cfg)

    score = comparator.service_sim(ws1, ws2)
    result = {
        "service_a": ws1.name,
        "service_b": ws2.name,
        "score": score,
        "bucket": bucketize(score).value,
        "directed_a_to_b": comparator.directed_service_sim(ws1, ws2),
        "directed_b_to_a": comparator.directed_service_sim(ws2, ws1),
    }

    if cfg.output_format == "json":
        _emit(json.dumps(result, indent=2))
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(result), lineterminator="\n")
        writer.writeheader()
        writer.writerow({k: repr(v) if isinstance(v, float) else v for k, v in result.items()})
        _emit(buf.getvalue())
    else:
        table = Table(title="Service similarity")
        table.add_column("Field")
        table.add_column("Value")
        for key, value in result.items():
            table.add_row(key, repr(value) if isinstance(value, float) else str(value))
        _print_table(table)
    return constants.EXIT_OK


def cmd_matrix(args, cfg: RunConfig) -> int:
    services = _scan_dir(args.dir, cfg)
    if len(services) < 2:
        logger.error(f"Need at least 2 parseable WSDLs in {args.dir}, found {len(services)}")
        return constants.EXIT_INPUT_ERROR

    comparator = _comparator(cfg)
    ids = [service_id for service_id, _ in services]
    n = len(services)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    scores = score_pairs(
        comparator, [s for _, s in services], pairs, jobs=cfg.parallelism, show_progress=_show_progress()
    )

    matrix = np.eye(n)
    for (i, j), score in zip(pairs, scores):
        matrix[i, j] = matrix[j, i] = score

    if cfg.output_format == "json":
        _emit(json.dumps({"services": ids, "matrix": matrix.tolist()}, indent=2), args.out)
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["service", *ids])
        for service_id, row in zip(ids, matrix.tolist()):
            writer.writerow([service_id, *(repr(v) for v in row)])
        _emit(buf.getvalue(), args.out)
    else:
        table = Table(title="Service similarity matrix")
        table.add_column("")
        for service_id in ids:
            table.add_column(service_id, justify="right")
        for service_id, row in zip(ids, matrix.tolist()):
            table.add_row(service_id, *(f"{v:.4f}" for v in row))
        _print_table(table, args.out)
    return constants.EXIT_OK


def cmd_rank(args, cfg: RunConfig) -> int:
    target = _parse(args.target, cfg)
    candidates = _scan_dir(args.dir, cfg)
    if not candidates:
        logger.error(f"No parseable candidate WSDLs in {args.dir}")
        return constants.EXIT_INPUT_ERROR

    comparator = _comparator(cfg)
    services = [target, *(s for _, s in candidates)]
    pairs = [(0, k) for k in range(1, len(services))]
    scores = score_pairs(comparator, services, pairs, jobs=cfg.parallelism, show_progress=_show_progress())

    ranking = sorted(
        ((service_id, score) for (service_id, _), score in zip(candidates, scores)),
        key=lambda item: (-item[1], item[0]),
    )
    if args.top is not None:
        ranking = ranking[: args.top]

    rows = [
        {"rank": k, "service": service_id, "score": score, "bucket": bucketize(score).value}
        for k, (service_id, score) in enumerate(ranking, 1)
    ]
    if cfg.output_format == "json":
        _emit(json.dumps({"target": target.name, "ranking": rows}, indent=2))
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["rank", "service", "score", "bucket"], lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({**row, "score": repr(row["score"])})
        _emit(buf.getvalue())
    else:
        table = Table(title=f"Substitutes for {target.name}")
        table.add_column("#", justify="right")
        table.add_column("Service")
        table.add_column("Score", justify="right")
        table.add_column("Bucket")
        for row in rows:
            table.add_row(str(row["rank"]), row["service"], f"{row['score']:.4f}", row["bucket"])
        _print_table(table)
    return constants.EXIT_OK


def _replay_reports(paths: list[str], cfg: RunConfig) -> dict:
    reports = {}
    for path in paths:
        labels, scores = read_replay(path)
        for domain, report in evaluate_by_domain(labels, scores, threshold=cfg.positive_threshold).items():
            name = domain or Path(path).stem
            report.domain = name
            reports[name] = report
    return reports


def _service_id(name: str) -> str:
    """Labels may name a service by file stem or by full file name."""
    path = Path(name)
    return path.stem if path.suffix.lower() in constants.WSDL_EXTENSIONS else name


def _corpus_reports(directory: str, labels_path: str, cfg: RunConfig) -> dict:
    labels = read_labels(labels_path)
    parsed = _scan_dir(directory, cfg)
    index = {service_id: k for k, (service_id, _) in enumerate(parsed)}
    known = {e.service_a for e in labels if _service_id(e.service_a) in index}
    known |= {e.service_b for e in labels if _service_id(e.service_b) in index}

    wanted = [e for e in labels if e.service_a in known and e.service_b in known]
    pairs = [(index[_service_id(e.service_a)], index[_service_id(e.service_b)]) for e in wanted]

    scores = {}
    if pairs:
        values = score_pairs(
            _comparator(cfg), [s for _, s in parsed], pairs,
            jobs=cfg.parallelism, show_progress=_show_progress(),
        )
        scores = {pair_key(e.service_a, e.service_b, e.domain): v for e, v in zip(wanted, values)}

    return evaluate_by_domain(labels, scores, known_ids=known, threshold=cfg.positive_threshold)


def cmd_eval(args, cfg: RunConfig) -> int:
    if args.replay:
        if args.paths:
            logger.error("eval takes either --replay files or DIR LABELS, not both")
            return constants.EXIT_INPUT_ERROR
        reports = _replay_reports(args.replay, cfg)
    else:
        if len(args.paths) != 2:
            logger.error("eval needs DIR LABELS (or --replay FILE)")
            return constants.EXIT_INPUT_ERROR
        reports = _corpus_reports(args.paths[0], args.paths[1], cfg)

    if cfg.output_format == "json":
        _emit(report_to_json(reports))
    elif cfg.output_format == "csv":
        _emit(report_to_csv(reports))
    else:
        print_eval_report(reports)
    return constants.EXIT_OK


COMMANDS = {
    "sim": cmd_sim,
    "matrix": cmd_matrix,
    "rank": cmd_rank,
    "eval": cmd_eval,
}


# ── Argument parsing ──────────────────────────────────────────────────────

def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--wordnet-dir", help=f"WordNet dict folder (default: ${constants.WORDNET_ENV_VAR})")
    common.add_argument("--weights", help="op_sim weights p1,p2,p3 (default 1,1,2)")
    common.add_argument("--stopwords", help="stopword file, one word per line")
    common.add_argument("--wsd-threshold", type=float, help="Jaro-Winkler threshold for Lesk overlap")
    common.add_argument("--max-depth", type=int, help="deepest parameter tree level kept")
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="output format")
    common.add_argument("--jobs", type=int, help="worker processes for pair scoring")
    common.add_argument("--allow-network", action="store_true", default=None,
                        help="allow fetching remote imported schemas")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="wssim",
        description="Similarity between WSDL-described web services.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sim", parents=[common], help="score two services")
    p.add_argument("wsdl_a")
    p.add_argument("wsdl_b")

    p = sub.add_parser("matrix", parents=[common], help="pairwise matrix of a folder of WSDLs")
    p.add_argument("dir")
    p.add_argument("--out", help="write the matrix to this file instead of stdout")

    p = sub.add_parser("rank", parents=[common], help="rank substitutes for a target service")
    p.add_argument("target")
    p.add_argument("dir")
    p.add_argument("--top", type=int, help="keep only the K best candidates")

    p = sub.add_parser("eval", parents=[common], help="compare scores with expert labels")
    p.add_argument("paths", nargs="*", metavar="DIR LABELS")
    p.add_argument("--replay", action="append", help="CSV of published scores and labels (repeatable)")
    p.add_argument("--positive-threshold", type=float, help="score counted as a positive prediction")
    return parser


def _overrides(args) -> dict:
    return {
        "wordnet_dir": args.wordnet_dir,
        "weights": args.weights,
        "stopword_file": args.stopwords,
        "wsd_overlap_threshold": args.wsd_threshold,
        "max_depth": args.max_depth,
        "output_format": args.format,
        "parallelism": args.jobs,
        "allow_network": args.allow_network,
        "positive_threshold": getattr(args, "positive_threshold", None),
    }


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        cfg = resolve_run_config(_overrides(args))
        Weights(*cfg.weights)
    except ConfigError as e:
        logger.error(f"Invalid configuration: {e}")
        return constants.EXIT_INPUT_ERROR

    try:
        return COMMANDS[args.command](args, cfg)
    except LexiconError as e:
        logger.error(f"WordNet unavailable: {e}")
        return constants.EXIT_ENV_ERROR
    except (WsSimError, OSError) as e:
        logger.error(str(e))
        return constants.EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
