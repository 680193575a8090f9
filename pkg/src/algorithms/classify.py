import logging

from src.algorithms.companion import find_positive_companion, verify_companion
from src.algorithms.positivity import is_positive
from src.algorithms.symmetrize import (
    check_skew_symmetrizable, check_symmetrizable, integer_normalize, verify_symmetrizer
)
from src.errors import SearchCapExceeded, WitnessVerificationError
from src.models.matrix import (
    connected_components, is_skew_symmetric_by_signs, is_symmetric_by_signs
)
from src.models.report import ClassificationReport
from src.models.symmetrizer import SymmetrizeOutcome

logger = logging.getLogger(__name__)


def ensure_symmetrizer(matrix, symmetrizer):
    if not verify_symmetrizer(matrix, symmetrizer):
        raise WitnessVerificationError(f'{symmetrizer.kind} symmetrizer failed re-verification')
    return symmetrizer


def ensure_companion(matrix, result):
    if result.found and not verify_companion(matrix, result.companion):
        raise WitnessVerificationError('companion failed re-verification')
    return result


def _normalized(outcome, matrix, components):
    if not outcome.verdict:
        return outcome
    witness = integer_normalize(outcome.witness, components)
    return SymmetrizeOutcome(True, outcome.kind, witness=witness, pair_inspections=outcome.pair_inspections)


def classify(matrix, prune=True, fastpath=True, cap=None, integer_symmetrizer=False):
    """Run every classifier on one matrix; witnesses are re-checked before they are reported"""
    components = connected_components(matrix)
    symmetrizable = check_symmetrizable(matrix)
    skew = check_skew_symmetrizable(matrix)
    if integer_symmetrizer:
        symmetrizable = _normalized(symmetrizable, matrix, components)
        skew = _normalized(skew, matrix, components)
    for outcome in (symmetrizable, skew):
        if outcome.verdict:
            ensure_symmetrizer(matrix, outcome.witness)

    positive = is_positive(matrix) if symmetrizable.verdict else None

    companion = None
    undecided = False
    if skew.verdict:
        try:
            companion = ensure_companion(
                matrix, find_positive_companion(matrix, prune=prune, fastpath=fastpath, cap=cap)
            )
        except SearchCapExceeded as e:
            logger.warning(f'Companion search undecided: {e}')
            undecided = True

    return ClassificationReport(
        input_dims=matrix.n,
        symmetric_by_signs=is_symmetric_by_signs(matrix),
        skew_symmetric_by_signs=is_skew_symmetric_by_signs(matrix),
        symmetrizable=symmetrizable,
        skew_symmetrizable=skew,
        connected=components.is_connected,
        components=components,
        positive=positive,
        companion=companion,
        companion_undecided=undecided
    )
