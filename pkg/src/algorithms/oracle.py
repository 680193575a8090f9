"""Slow reference implementations.

Symmetrizability is decided from cycle products and determinants by
cofactor expansion. Companions are found by trying every sign on every
pair, and each candidate is judged on all of its principal minors. That
last step uses the Bareiss `all_principal_minors_positive` from the
positivity module. It is checked against cofactor expansion in the tests.
Everything else here shares only the matrix type and principal submatrices
with the fast algorithms.
"""
import logging
from itertools import combinations, product

import networkx as nx

from src.algorithms.positivity import all_principal_minors_positive
from src.errors import OracleLimitError, WitnessVerificationError
from src.models.companion import (
    FAST_PATH_CPLUS_FIRST, FAST_PATH_NONE, CompanionResult
)
from src.models.matrix import IntMatrix, is_symmetric_by_signs, principal_submatrix
from src.models.positivity import MinorSequence, PositivityVerdict

logger = logging.getLogger(__name__)

MAX_CYCLE_ORACLE_SIZE = 8
MAX_COFACTOR_ORACLE_SIZE = 8
MAX_COMPANION_ORACLE_SIZE = 4


def _require_size(matrix, limit, name):
    if matrix.n > limit:
        raise OracleLimitError(f'{name} handles at most {limit}x{limit}, got {matrix.n}x{matrix.n}')


def cycle_symmetrizable(matrix):
    """Symmetric by signs, and every simple cycle of length >= 3 has equal products both ways"""
    _require_size(matrix, MAX_CYCLE_ORACLE_SIZE, 'cycle_symmetrizable')
    if not is_symmetric_by_signs(matrix):
        return False

    graph = nx.DiGraph()
    graph.add_nodes_from(range(matrix.n))
    graph.add_edges_from(
        (i, j) for i in range(matrix.n) for j in range(matrix.n)
        if i != j and matrix[i, j] != 0
    )
    for cycle in nx.simple_cycles(graph):
        if len(cycle) < 3:
            continue
        forward = 1
        backward = 1
        for position, i in enumerate(cycle):
            j = cycle[(position + 1) % len(cycle)]
            forward *= matrix[i, j]
            backward *= matrix[j, i]
        if forward != backward:
            logger.debug(f'Cycle {[i + 1 for i in cycle]}: {forward} != {backward}')
            return False
    return True


def skew_as_symmetric(matrix):
    """Negate the strict lower triangle and zero the diagonal.

    D x B is skew-symmetric exactly when B has a zero diagonal and D
    symmetrizes the result.
    """
    n = matrix.n
    return IntMatrix(tuple(
        tuple(0 if i == j else (matrix[i, j] if i < j else -matrix[i, j]) for j in range(n))
        for i in range(n)
    ))


def cycle_skew_symmetrizable(matrix):
    if any(value != 0 for value in matrix.diagonal()):
        return False
    return cycle_symmetrizable(skew_as_symmetric(matrix))


def cofactor_determinant(matrix):
    """First-row cofactor expansion"""
    _require_size(matrix, MAX_COFACTOR_ORACLE_SIZE, 'cofactor_determinant')
    return _cofactor(matrix.rows)


def _cofactor(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, value in enumerate(rows[0]):
        if value == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        total += (-1) ** j * value * _cofactor(minor)
    return total


def principal_minors_positive(matrix):
    """Every non-empty principal minor positive, by cofactor expansion"""
    n = matrix.n
    return all(
        cofactor_determinant(principal_submatrix(matrix, keep)) > 0
        for size in range(1, n + 1)
        for keep in combinations(range(n), size)
    )


def principal_minors_verdict(matrix):
    """PositivityVerdict decided on all principal minors by cofactor expansion.

    The reported minors are the leading ones up to the first that is not
    positive; on symmetrizable input one of them fails whenever any
    principal minor does.
    """
    _require_size(matrix, MAX_COFACTOR_ORACLE_SIZE, 'principal_minors_verdict')
    positive = principal_minors_positive(matrix)
    minors = []
    for k in range(1, matrix.n + 1):
        minor = cofactor_determinant(principal_submatrix(matrix, range(k)))
        minors.append(minor)
        if minor <= 0:
            if positive:
                raise WitnessVerificationError(f'leading minor {k} is {minor} but every principal minor is positive')
            return PositivityVerdict(False, MinorSequence(minors), first_failure=k)
    if not positive:
        raise WitnessVerificationError('every leading minor is positive but some principal minor is not')
    return PositivityVerdict(True, MinorSequence(minors))


def exhaustive_companion(matrix):
    """C+ and then every sign on every pair i < j, zero pairs included.

    Candidates are judged on all principal minors rather than the leading ones.
    """
    _require_size(matrix, MAX_COMPANION_ORACLE_SIZE, 'exhaustive_companion')
    n = matrix.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def candidate(signs):
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), sign in zip(pairs, signs):
            rows[i][j] = sign * abs(matrix[i, j])
            rows[j][i] = sign * abs(matrix[j, i])
        return IntMatrix.from_rows(rows)

    cplus = candidate((1,) * len(pairs))
    tried = 1
    if all_principal_minors_positive(cplus):
        return CompanionResult(True, cplus, tried, FAST_PATH_CPLUS_FIRST)
    for signs in product((-1, 1), repeat=len(pairs)):
        current = candidate(signs)
        tried += 1
        if all_principal_minors_positive(current):
            return CompanionResult(True, current, tried, FAST_PATH_NONE)
    return CompanionResult(False, None, tried, FAST_PATH_NONE)
