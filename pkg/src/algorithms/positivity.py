"""Positivity of symmetrizable matrices through leading principal minors.

For a symmetrizable C, C is positive exactly when every leading principal
minor is strictly positive, and equally when every principal minor is.
Minors are evaluated smallest first and the walk stops at the first one
that is not positive.
"""
import logging
from itertools import combinations

from src.errors import NotSymmetricBySignsError
from src.models.matrix import (
    determinant, is_symmetric_by_signs, leading_principal_submatrix, principal_submatrix
)
from src.models.positivity import MinorSequence, PositivityVerdict

logger = logging.getLogger(__name__)


def _require_symmetric_by_signs(matrix):
    if not is_symmetric_by_signs(matrix):
        raise NotSymmetricBySignsError(
            'positivity is only meaningful for symmetrizable matrices; '
            'the input is not symmetric by signs'
        )


def is_positive(matrix):
    """Leading minors of sizes 1..n, ascending, with early exit"""
    _require_symmetric_by_signs(matrix)
    minors = []
    for k in range(1, matrix.n + 1):
        minor = determinant(leading_principal_submatrix(matrix, k))
        minors.append(minor)
        if minor <= 0:
            logger.info(f'Leading minor of size {k} is {minor}; not positive')
            return PositivityVerdict(False, MinorSequence(minors), first_failure=k)
    logger.info(f'All {matrix.n} leading minors positive')
    return PositivityVerdict(True, MinorSequence(minors))


def is_positive_descending(matrix):
    """Same decision, shrinking from the full matrix down to its 1 x 1 corner"""
    _require_symmetric_by_signs(matrix)
    for k in range(matrix.n, 0, -1):
        if determinant(leading_principal_submatrix(matrix, k)) <= 0:
            return False
    return True


def leading_principal_minors(matrix):
    """Every leading minor, no early exit"""
    return MinorSequence(
        determinant(leading_principal_submatrix(matrix, k)) for k in range(1, matrix.n + 1)
    )


def all_principal_minors_positive(matrix):
    """Every non-empty principal minor > 0; 2^n determinants, meant for small n"""
    n = matrix.n
    for size in range(1, n + 1):
        for keep in combinations(range(n), size):
            if determinant(principal_submatrix(matrix, keep)) <= 0:
                return False
    return True
