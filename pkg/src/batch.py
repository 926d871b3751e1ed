"""
Pairwise scoring over a worker pool.

Workers are forked after the comparator and services are stored in module
globals, so the lexicon is shared copy-on-write and never pickled. Results
come back through ``imap`` in submission order, which keeps output identical
for any number of workers. Platforms without ``fork`` score serially.
"""

from __future__ import annotations

import multiprocessing
from multiprocessing import cpu_count
from typing import Sequence

from tqdm import tqdm

from src.logger import logger
from src.similarity import ServiceComparator
from src.wsdl import ServiceDescription

_comparator: ServiceComparator | None = None
_services: Sequence[ServiceDescription] = ()


def _score_pair(pair: tuple[int, int]) -> float:
    i, j = pair
    return _comparator.service_sim(_services[i], _services[j])


def _fork_context():
    try:
        return multiprocessing.get_context("fork")
    except ValueError:
        return None


def score_pairs(
    comparator: ServiceComparator,
    services: Sequence[ServiceDescription],
    pairs: Sequence[tuple[int, int]],
    jobs: int = 1,
    show_progress: bool = False,
) -> list[float]:
    """
    service_sim for every (i, j) index pair, in the order given.

    Args:
        comparator: Configured ServiceComparator
        services: Parsed services the indices refer to
        pairs: Index pairs to score
        jobs: Worker processes; capped at cpu_count() - 1 (minimum 1)
        show_progress: Display a tqdm bar

    Returns:
        Scores aligned with ``pairs``
    """
    global _comparator, _services
    _comparator, _services = comparator, services

    num_workers = max(1, min(jobs, cpu_count() - 1, len(pairs)))
    context = _fork_context() if num_workers > 1 else None
    progress = dict(total=len(pairs), desc="Scoring pairs", unit="pair", disable=not show_progress)

    try:
        if context is None:
            if num_workers > 1:
                logger.warning("fork is unavailable on this platform; scoring serially")
            return [_score_pair(pair) for pair in tqdm(pairs, **progress)]

        logger.info(f"Using {num_workers} worker processes for {len(pairs)} pairs")
        with context.Pool(processes=num_workers) as pool:
            return list(tqdm(pool.imap(_score_pair, pairs, chunksize=4), **progress))
    finally:
        _comparator, _services = None, ()
