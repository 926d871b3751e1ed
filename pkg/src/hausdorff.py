"""
Modified Hausdorff matching between two finite sets, in similarity form.

Each element is scored by its best match in the other set; the directed score
is the mean of those best matches and the set score is the weaker direction.
"""

from __future__ import annotations

from typing import Callable, Sequence, TypeVar

import numpy as np

from src.errors import EmptySet

T = TypeVar("T")
U = TypeVar("U")

SimFn = Callable[[T, U], float]


def similarity_matrix(A: Sequence[T], B: Sequence[U], simfn: SimFn) -> np.ndarray:
    """|A| x |B| matrix with entry (i, j) = simfn(A[i], B[j]), filled row by row."""
    matrix = np.empty((len(A), len(B)), dtype=np.float64)
    for i, a in enumerate(A):
        matrix[i] = [simfn(a, b) for b in B]
    return matrix


def directed_similarity(A: Sequence[T], B: Sequence[U], simfn: SimFn) -> float:
    """(1/|A|) * sum over a in A of max over b in B of simfn(a, b)."""
    if not A or not B:
        raise EmptySet("directed similarity needs two nonempty sets")
    total = 0.0
    for a in A:
        total += max(simfn(a, b) for b in B)
    return total / len(A)


def set_similarity(A: Sequence[T], B: Sequence[U], simfn: SimFn, symmetric: bool = False) -> float:
    """
    min(directed(A, B), directed(B, A)).

    Args:
        A, B: nonempty sequences
        simfn: element similarity; called as simfn(a, b) and, unless
            ``symmetric`` is set, as simfn(b, a)
        symmetric: simfn(a, b) == simfn(b, a); the matrix is then built once
            and both directions read from it

    Raises:
        EmptySet: A or B is empty
    """
    A, B = list(A), list(B)
    if not A or not B:
        raise EmptySet("set similarity needs two nonempty sets")
    if not symmetric:
        return min(directed_similarity(A, B, simfn), directed_similarity(B, A, simfn))

    matrix = similarity_matrix(A, B, simfn)
    forward = float(matrix.max(axis=1).mean())
    backward = float(matrix.max(axis=0).mean())
    return min(forward, backward)
