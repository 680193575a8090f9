"""Symmetrizability decisions and symmetrizer construction.

The decision procedure walks the matrix with an ordered worklist: the first
index is popped, seeded with d = 1 when its component has not been reached
yet, and every remaining index it is linked to receives (or is checked
against) the ratio forced by that link and moves to the front of the list.
A full pass over all pairs follows the walk before a witness is returned.
"""
import logging
import math
from fractions import Fraction

from src.errors import DimensionMismatchError
from src.models.matrix import connected_components
from src.models.symmetrizer import (
    RATIO_CONFLICT, SIGN_VIOLATION, SKEW, SYMMETRIC,
    FailureReason, Symmetrizer, SymmetrizeOutcome
)

logger = logging.getLogger(__name__)


def _orientation(kind):
    # d_i * a_ij = orientation * d_j * a_ji
    return 1 if kind == SYMMETRIC else -1


def _walk(matrix, kind):
    """Returns (diag, failure, pair_inspections); diag is None on failure"""
    orientation = _orientation(kind)
    n = matrix.n
    inspections = 0

    if kind == SKEW:
        for i in range(n):
            if matrix[i, i] != 0:
                logger.debug(f'Nonzero diagonal entry at {i + 1}')
                return None, FailureReason(SIGN_VIOLATION, i, i), inspections

    d = [None] * n
    worklist = list(range(n))
    while worklist:
        i = worklist.pop(0)
        if d[i] is None:
            d[i] = Fraction(1)
            logger.debug(f'Seeding d_{i + 1} = 1 for a new component')

        moved = []
        rest = []
        for j in worklist:
            inspections += 1
            a_ij, a_ji = matrix[i, j], matrix[j, i]
            if a_ij * a_ji == 0:
                if a_ij + a_ji != 0:
                    return None, FailureReason(SIGN_VIOLATION, i, j), inspections
                rest.append(j)
                continue
            if orientation * a_ij * a_ji < 0:
                return None, FailureReason(SIGN_VIOLATION, i, j), inspections

            moved.append(j)
            if d[j] is not None:
                if d[i] * a_ij != orientation * d[j] * a_ji:
                    return None, FailureReason(RATIO_CONFLICT, i, j), inspections
            else:
                d[j] = orientation * d[i] * a_ij / a_ji
                logger.debug(f'd_{j + 1} = {d[j]} from pair ({i + 1}, {j + 1})')
        # each move-to-front lands ahead of the previous one
        worklist = moved[::-1] + rest

    for i in range(n):
        for j in range(i + 1, n):
            inspections += 1
            if d[i] * matrix[i, j] != orientation * d[j] * matrix[j, i]:
                return None, FailureReason(RATIO_CONFLICT, i, j), inspections
    return d, None, inspections


def _check(matrix, kind):
    diag, failure, inspections = _walk(matrix, kind)
    if failure is not None:
        logger.info(f'Not {kind}-symmetrizable: {failure.reason} at ({failure.i + 1}, {failure.j + 1})')
        return SymmetrizeOutcome(False, kind, failure_reason=failure, pair_inspections=inspections)
    return SymmetrizeOutcome(True, kind, witness=Symmetrizer(tuple(diag), kind), pair_inspections=inspections)


def check_symmetrizable(matrix):
    """Decide whether D x A is symmetric for some positive diagonal D"""
    return _check(matrix, SYMMETRIC)


def check_skew_symmetrizable(matrix):
    """Decide whether D x B is skew-symmetric for some positive diagonal D"""
    return _check(matrix, SKEW)


def is_symmetrizable(matrix):
    return check_symmetrizable(matrix).verdict


def is_quasi_cartan(matrix):
    return all(value == 2 for value in matrix.diagonal()) and is_symmetrizable(matrix)


def find_symmetrizer_with_stats(matrix):
    """Symmetrizer for a matrix already known to be symmetrizable, plus pair inspections.

    Stops as soon as every d_i is set. Nothing is verified: on input that is
    not symmetrizable the result is some positive diagonal with no meaning.
    """
    n = matrix.n
    d = [None] * n
    unset = set(range(n))
    worklist = list(range(n))
    inspections = 0

    while unset:
        i = worklist.pop(0)
        if d[i] is None:
            d[i] = Fraction(1)
            unset.discard(i)

        moved = []
        rest = []
        for position, j in enumerate(worklist):
            if not unset:
                rest.extend(worklist[position:])
                break
            inspections += 1
            if matrix[j, i] == 0:
                rest.append(j)
                continue
            moved.append(j)
            if d[j] is None:
                value = d[i] * matrix[i, j] / matrix[j, i]
                # only non-symmetrizable input can produce a non-positive ratio
                d[j] = abs(value) or Fraction(1)
                unset.discard(j)
        worklist = moved[::-1] + rest

    return Symmetrizer(tuple(d), SYMMETRIC), inspections


def find_symmetrizer(matrix):
    symmetrizer, _ = find_symmetrizer_with_stats(matrix)
    return symmetrizer


def integer_normalize(symmetrizer, components=None):
    """Smallest positive integer symmetrizer, scaled independently on each component.

    Without a partition the whole diagonal is treated as one block.
    """
    diag = list(symmetrizer.diag)
    blocks = components.blocks if components is not None else (tuple(range(len(diag))),)
    for block in blocks:
        if not block:
            continue
        scale = math.lcm(*(diag[i].denominator for i in block))
        numerators = [int(diag[i] * scale) for i in block]
        common = math.gcd(*numerators)
        for i, numerator in zip(block, numerators):
            diag[i] = Fraction(numerator // common)
    return Symmetrizer(tuple(diag), symmetrizer.kind)


def integer_normalize_for(symmetrizer, matrix):
    """integer_normalize over the connected components of the certified matrix"""
    return integer_normalize(symmetrizer, connected_components(matrix))


def verify_symmetrizer(matrix, symmetrizer):
    """Exact entrywise check of d_i * a_ij = (+/-) d_j * a_ji"""
    if symmetrizer.n != matrix.n:
        raise DimensionMismatchError(
            f'symmetrizer of size {symmetrizer.n} for a {matrix.n}x{matrix.n} matrix'
        )
    orientation = _orientation(symmetrizer.kind)
    d = symmetrizer.diag
    n = matrix.n
    return all(
        d[i] * matrix[i, j] == orientation * d[j] * matrix[j, i]
        for i in range(n) for j in range(i, n)
    )


def symmetrized(matrix, symmetrizer):
    """D x A as rows of Fractions"""
    if symmetrizer.n != matrix.n:
        raise DimensionMismatchError(
            f'symmetrizer of size {symmetrizer.n} for a {matrix.n}x{matrix.n} matrix'
        )
    return tuple(
        tuple(symmetrizer.diag[i] * value for value in row)
        for i, row in enumerate(matrix.rows)
    )
