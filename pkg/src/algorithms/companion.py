"""Search for a positive quasi-Cartan companion of a skew-symmetrizable matrix.

Candidates are C+ (every off-diagonal entry |b_ij|, diagonal 2) followed by
every sign assignment on the nonzero pairs, taken in lexicographic order
with -1 before +1. Pairs are ordered by their larger index, then their
smaller one, so the leading k x k block is fully decided as soon as the
last pair inside it has a sign.

Decided without search:
  * n <= 2, n == 3 and fully dense B: C+ is positive or nothing is.
  * disconnected B: each connected block is solved on its own and the
    block companions are reassembled.

Pruning rules, all necessary conditions on a positive companion:
  * |c_ij * c_ji| <= 3, and <= 2 inside a connected block of size >= 3;
  * 0 <= c_ik * c_kj * c_ji <= 2 on every triangle, so a triangle's three
    signs multiply to +1 and its magnitude product is at most 2;
  * every completed leading block has a positive determinant.
"""
import logging
from itertools import combinations, product

from src.algorithms.positivity import is_positive
from src.algorithms.symmetrize import check_skew_symmetrizable
from src.config import default_search_cap
from src.errors import (
    DimensionMismatchError, NotSkewSymmetrizableError, SearchCapExceeded
)
from src.models.companion import (
    FAST_PATH_COMPONENT_SPLIT, FAST_PATH_CPLUS_FIRST, FAST_PATH_DENSE,
    FAST_PATH_NONE, FAST_PATH_SMALL, FAST_PATH_THREE_BY_THREE,
    CompanionResult, SignAssignment
)
from src.models.matrix import (
    IntMatrix, Permutation, connected_components, determinant, direct_sum,
    is_symmetric_by_signs, leading_principal_submatrix, permute, principal_submatrix
)

logger = logging.getLogger(__name__)

SIGNS = (-1, 1)


def c_plus(matrix):
    """Diagonal 2, off-diagonal |b_ij|"""
    n = matrix.n
    return IntMatrix(tuple(
        tuple(2 if i == j else abs(matrix[i, j]) for j in range(n))
        for i in range(n)
    ))


def nonzero_pairs(matrix):
    """Pairs (i, j), i < j, with b_ij or b_ji nonzero, ordered by (j, i)"""
    n = matrix.n
    return [
        (i, j) for j in range(n) for i in range(j)
        if matrix[i, j] != 0 or matrix[j, i] != 0
    ]


def companion_from_signs(matrix, assignment):
    """c_ij = x_ij |b_ij|, c_ji = x_ij |b_ji|, c_ii = 2; zero pairs stay zero"""
    n = matrix.n
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for (i, j), sign in assignment.signs.items():
        rows[i][j] = sign * abs(matrix[i, j])
        rows[j][i] = sign * abs(matrix[j, i])
    return IntMatrix.from_rows(rows)


def iter_sign_assignments(matrix):
    """Every SignAssignment on the nonzero pairs, in search order"""
    pairs = nonzero_pairs(matrix)
    for signs in product(SIGNS, repeat=len(pairs)):
        yield SignAssignment(dict(zip(pairs, signs)))


def sign_conjugate(matrix, signs):
    """X C X for the diagonal X = diag(signs), signs in {-1, +1}"""
    n = matrix.n
    if len(signs) != n:
        raise DimensionMismatchError(f'{len(signs)} signs for a {n}x{n} matrix')
    return IntMatrix(tuple(
        tuple(signs[i] * matrix[i, j] * signs[j] for j in range(n))
        for i in range(n)
    ))


def verify_companion(matrix, candidate):
    """Polynomial check that candidate is a positive quasi-Cartan companion of matrix"""
    if matrix.n != candidate.n:
        raise DimensionMismatchError(
            f'companion is {candidate.n}x{candidate.n}, matrix is {matrix.n}x{matrix.n}'
        )
    if any(value != 2 for value in candidate.diagonal()):
        return False
    for i, j in matrix.off_diagonal_pairs():
        if abs(candidate[i, j]) != abs(matrix[i, j]) or abs(candidate[j, i]) != abs(matrix[j, i]):
            return False
    if not is_symmetric_by_signs(candidate):
        return False
    return is_positive(candidate).positive


def companion_bound_violations(candidate):
    """Pair and triangle bounds every positive quasi-Cartan matrix obeys"""
    n = candidate.n
    components = connected_components(candidate)
    violations = []
    for i, j in candidate.off_diagonal_pairs():
        pair = candidate[i, j] * candidate[j, i]
        if pair < 0 or pair > 3:
            violations.append(f'c_{i + 1}{j + 1} * c_{j + 1}{i + 1} = {pair} outside [0, 3]')
        elif pair > 2 and len(components.block_of(i)) >= 3:
            violations.append(f'c_{i + 1}{j + 1} * c_{j + 1}{i + 1} = {pair} > 2 in a connected block of size >= 3')
    if n >= 3:
        for i, j, k in combinations(range(n), 3):
            for triple in (
                candidate[i, k] * candidate[k, j] * candidate[j, i],
                candidate[i, j] * candidate[j, k] * candidate[k, i],
            ):
                if triple < 0 or triple > 2:
                    violations.append(f'triangle ({i + 1}, {j + 1}, {k + 1}) product {triple} outside [0, 2]')
    return violations


def _fast_path(matrix):
    n = matrix.n
    if n <= 2:
        return FAST_PATH_SMALL
    if n == 3:
        return FAST_PATH_THREE_BY_THREE
    if all(matrix[i, j] != 0 for i in range(n) for j in range(n) if i != j):
        return FAST_PATH_DENSE
    return None


def _magnitudes_admissible(matrix, components):
    """Sign-independent bounds: pair products and triangle magnitudes"""
    for i, j in nonzero_pairs(matrix):
        pair = abs(matrix[i, j] * matrix[j, i])
        if pair > 3:
            logger.debug(f'Pair ({i + 1}, {j + 1}) has |b_ij b_ji| = {pair} > 3')
            return False
        if pair > 2 and len(components.block_of(i)) >= 3:
            logger.debug(f'Pair ({i + 1}, {j + 1}) has |b_ij b_ji| = {pair} > 2 in a connected block')
            return False
    for i, j, k in _triangles(matrix):
        if abs(matrix[i, k] * matrix[k, j] * matrix[j, i]) > 2:
            logger.debug(f'Triangle ({i + 1}, {j + 1}, {k + 1}) has magnitude product > 2')
            return False
    return True


def _triangles(matrix):
    n = matrix.n
    return [
        (i, j, k) for i, j, k in combinations(range(n), 3)
        if matrix[i, j] != 0 and matrix[i, k] != 0 and matrix[j, k] != 0
    ]


def find_positive_companion(matrix, prune=True, fastpath=True, cap=None):
    """Return a positive quasi-Cartan companion of a skew-symmetrizable matrix, if one exists"""
    if cap is None:
        cap = default_search_cap()
    outcome = check_skew_symmetrizable(matrix)
    if not outcome.verdict:
        failure = outcome.failure_reason
        raise NotSkewSymmetrizableError(
            f'matrix is not skew-symmetrizable ({failure.reason} at ({failure.i + 1}, {failure.j + 1}))'
        )
    result = _search(matrix, prune, fastpath, cap)
    logger.info(
        f'Companion search: found={result.found}, tried={result.assignments_tried}, '
        f'fast_path={result.fast_path}'
    )
    return result


def _search(matrix, prune, fastpath, cap):
    cplus = c_plus(matrix)

    if fastpath:
        path = _fast_path(matrix)
        if path is not None:
            logger.debug(f'Deciding by C+ alone ({path})')
            positive = is_positive(cplus).positive
            return CompanionResult(positive, cplus if positive else None, 1, path)
        components = connected_components(matrix)
        if not components.is_connected:
            return _split(matrix, components, prune, cap)

    tried = 1
    if is_positive(cplus).positive:
        return CompanionResult(True, cplus, tried, FAST_PATH_CPLUS_FIRST)

    if prune:
        if not _magnitudes_admissible(matrix, connected_components(matrix)):
            return CompanionResult(False, None, tried, FAST_PATH_NONE)
        return _pruned_search(matrix, cap, tried)
    return _literal_search(matrix, cap, tried)


def _split(matrix, components, prune, cap):
    """Solve every connected block and reassemble them in the original order"""
    logger.debug(f'Splitting into {len(components.blocks)} connected blocks')
    tried = 0
    assembled = IntMatrix.zeros(0)
    for block in components.blocks:
        remaining = cap - tried
        if remaining <= 0:
            raise SearchCapExceeded(cap, tried)
        try:
            result = _search(principal_submatrix(matrix, block), prune, True, remaining)
        except SearchCapExceeded as e:
            raise SearchCapExceeded(cap, tried + e.tried)
        tried += result.assignments_tried
        if not result.found:
            return CompanionResult(False, None, tried, FAST_PATH_COMPONENT_SPLIT)
        assembled = direct_sum(assembled, result.companion)

    order = [i for block in components.blocks for i in block]
    companion = permute(assembled, Permutation(tuple(order)))
    return CompanionResult(True, companion, tried, FAST_PATH_COMPONENT_SPLIT)


def _literal_search(matrix, cap, tried):
    """Every sign assignment in order, each tested with the leading-minor criterion"""
    for assignment in iter_sign_assignments(matrix):
        if tried >= cap:
            logger.warning(f'Search cap {cap} reached')
            raise SearchCapExceeded(cap, tried)
        candidate = companion_from_signs(matrix, assignment)
        tried += 1
        if is_positive(candidate).positive:
            return CompanionResult(True, candidate, tried, FAST_PATH_NONE)
    return CompanionResult(False, None, tried, FAST_PATH_NONE)


def _pruned_search(matrix, cap, tried):
    """Backtracking over the same order; cut branches that break a necessary condition"""
    pairs = nonzero_pairs(matrix)
    m = len(pairs)
    position = {pair: t for t, pair in enumerate(pairs)}

    # triangle (i, j, k) is complete once its last pair (j, k) has a sign
    closing = [[] for _ in range(m)]
    for i, j, k in _triangles(matrix):
        closing[position[(j, k)]].append((position[(i, j)], position[(i, k)]))

    # leading block of size j + 1 is complete after the last pair with larger index j
    block_end = [None] * m
    for t, (i, j) in enumerate(pairs):
        if t == m - 1 or pairs[t + 1][1] != j:
            block_end[t] = j + 1

    n = matrix.n
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    signs = [0] * m
    next_option = [0] * m

    def admissible(t):
        for first, second in closing[t]:
            if signs[first] * signs[second] * signs[t] != 1:
                return False
        size = block_end[t]
        if size is not None:
            block = leading_principal_submatrix(IntMatrix.from_rows(rows), size)
            if determinant(block) <= 0:
                return False
        return True

    t = 0
    while t >= 0:
        if t == m:
            if tried >= cap:
                logger.warning(f'Search cap {cap} reached')
                raise SearchCapExceeded(cap, tried)
            candidate = IntMatrix.from_rows(rows)
            tried += 1
            if is_positive(candidate).positive:
                return CompanionResult(True, candidate, tried, FAST_PATH_NONE)
            t -= 1
            continue
        if next_option[t] == len(SIGNS):
            next_option[t] = 0
            t -= 1
            continue
        sign = SIGNS[next_option[t]]
        next_option[t] += 1
        signs[t] = sign
        i, j = pairs[t]
        rows[i][j] = sign * abs(matrix[i, j])
        rows[j][i] = sign * abs(matrix[j, i])
        if admissible(t):
            t += 1
    return CompanionResult(False, None, tried, FAST_PATH_NONE)

