import itertools

import pytest

from src import batch
from src.batch import score_pairs
from src.similarity import ServiceComparator
from src.wsdl import parse_wsdl_file
from tests.conftest import CORPUS_DIR


@pytest.fixture(scope="module")
def services():
    return [parse_wsdl_file(CORPUS_DIR / f"{name}.wsdl") for name in ("weather_1", "weather_2", "sms_1", "book_1")]


def test_scores_follow_pair_order(services):
    comparator = ServiceComparator()
    pairs = [(0, 1), (2, 3), (0, 0), (1, 3)]
    scores = score_pairs(comparator, services, pairs)
    assert scores == [comparator.service_sim(services[i], services[j]) for i, j in pairs]
    assert scores[2] == 1.0


def test_worker_pool_matches_serial_run(services, lexicon):
    comparator = ServiceComparator(lexicon)
    pairs = list(itertools.combinations(range(len(services)), 2))
    serial = score_pairs(comparator, services, pairs, jobs=1)
    parallel = score_pairs(comparator, services, pairs, jobs=3)
    assert parallel == serial


def test_globals_are_cleared(services):
    score_pairs(ServiceComparator(), services, [(0, 1)])
    assert batch._comparator is None
    assert batch._services == ()


def test_no_pairs(services):
    assert score_pairs(ServiceComparator(), services, []) == []
