import random

import numpy as np
import pytest

from src.errors import EmptySet
from src.hausdorff import directed_similarity, set_similarity, similarity_matrix


def table_sim(table):
    return lambda a, b: table[(a, b)]


def test_identical_sets():
    same = lambda a, b: 1.0 if a == b else 0.0
    assert set_similarity(["x", "y"], ["y", "x"], same) == 1.0


def test_directed_is_mean_of_best_matches():
    table = {("a", "x"): 0.2, ("a", "y"): 0.8, ("b", "x"): 0.5, ("b", "y"): 0.1}
    assert directed_similarity(["a", "b"], ["x", "y"], table_sim(table)) == pytest.approx((0.8 + 0.5) / 2)


def test_set_similarity_takes_weaker_direction():
    sims = {("a", "x"): 1.0, ("b", "x"): 0.0}
    sim = lambda p, q: sims.get((p, q), sims.get((q, p)))
    # every element of {x} is matched perfectly, but b has no counterpart
    assert directed_similarity(["x"], ["a", "b"], sim) == 1.0
    assert directed_similarity(["a", "b"], ["x"], sim) == 0.5
    assert set_similarity(["a", "b"], ["x"], sim) == 0.5
    assert set_similarity(["a", "b"], ["x"], sim, symmetric=True) == 0.5


def test_empty_sets_raise():
    sim = lambda a, b: 1.0
    with pytest.raises(EmptySet):
        directed_similarity([], ["a"], sim)
    with pytest.raises(EmptySet):
        set_similarity(["a"], [], sim)
    with pytest.raises(EmptySet):
        set_similarity([], [], sim, symmetric=True)


def test_similarity_matrix():
    matrix = similarity_matrix([1, 2], [10, 20, 30], lambda a, b: a * b / 100)
    assert matrix.shape == (2, 3)
    np.testing.assert_allclose(matrix, [[0.1, 0.2, 0.3], [0.2, 0.4, 0.6]])


def brute_force(A, B, sim):
    """Plain transcription: mean of best matches each way, weaker direction wins."""
    forward = sum(max(sim[a][b] for b in range(len(B))) for a in range(len(A))) / len(A)
    backward = sum(max(sim[a][b] for a in range(len(A))) for b in range(len(B))) / len(B)
    return min(forward, backward)


def test_matches_brute_force_on_random_tables():
    rng = random.Random(20240601)
    for _ in range(500):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        sim = [[rng.random() for _ in range(m)] for _ in range(n)]
        expected = brute_force(list(range(n)), list(range(m)), sim)

        # disjoint labels so one table answers both call orders
        A, B = [f"a{i}" for i in range(n)], [f"b{j}" for j in range(m)]
        table = {}
        for i in range(n):
            for j in range(m):
                table[A[i], B[j]] = table[B[j], A[i]] = sim[i][j]
        simfn = lambda x, y: table[x, y]
        assert set_similarity(A, B, simfn) == pytest.approx(expected, abs=1e-12)
        assert set_similarity(A, B, simfn, symmetric=True) == pytest.approx(expected, abs=1e-12)
        assert set_similarity(B, A, simfn) == pytest.approx(expected, abs=1e-12)


def test_similarity_form_is_dual_of_distance_form():
    """1 - directed similarity equals the directed mean-min distance with d = 1 - s."""
    rng = random.Random(3)
    for _ in range(100):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        sim = [[rng.random() for _ in range(m)] for _ in range(n)]
        distance = sum(min(1 - sim[a][b] for b in range(m)) for a in range(n)) / n
        directed = directed_similarity(list(range(n)), list(range(m)), lambda a, b: sim[a][b])
        assert 1 - directed == pytest.approx(distance, abs=1e-12)


def test_range_and_symmetry():
    rng = random.Random(11)
    for _ in range(200):
        values = {(a, b): rng.random() for a in range(4) for b in range(4)}
        sim = lambda a, b: values[(min(a, b), max(a, b))]
        A = rng.sample(range(4), rng.randint(1, 4))
        B = rng.sample(range(4), rng.randint(1, 4))
        score = set_similarity(A, B, sim, symmetric=True)
        assert 0.0 <= score <= 1.0
        assert score == set_similarity(B, A, sim, symmetric=True)
