import click

from src.algorithms.classify import ensure_symmetrizer
from src.algorithms.oracle import cycle_skew_symmetrizable, cycle_symmetrizable, skew_as_symmetric
from src.algorithms.symmetrize import (
    check_skew_symmetrizable, check_symmetrizable, find_symmetrizer, integer_normalize_for
)
from src.commands.common import (
    AFFIRMATIVE, NEGATIVE, emit, format_option, handle_errors,
    integer_symmetrizer_option, matrix_argument, oracle_option, read_matrix
)
from src.models.symmetrizer import SKEW, Symmetrizer, SymmetrizeOutcome


def _oracle_outcome(matrix, skew=False):
    if skew:
        if not cycle_skew_symmetrizable(matrix):
            return SymmetrizeOutcome(False, SKEW)
        witness = find_symmetrizer(skew_as_symmetric(matrix))
        return SymmetrizeOutcome(True, SKEW, witness=Symmetrizer(witness.diag, SKEW))
    if not cycle_symmetrizable(matrix):
        return SymmetrizeOutcome(False)
    return SymmetrizeOutcome(True, witness=find_symmetrizer(matrix))


def _describe(outcome, skew):
    label = 'skew-symmetrizable' if skew else 'symmetrizable'
    if outcome.verdict:
        lines = [f'{label}: yes', 'D = diag(' + ', '.join(str(d) for d in outcome.witness.diag) + ')']
    else:
        lines = [f'{label}: no']
        failure = outcome.failure_reason
        if failure is not None:
            lines.append(f'{failure.reason} at ({failure.i + 1}, {failure.j + 1})')
    return lines


@click.command('symmetrizable')
@matrix_argument
@click.option('--skew', is_flag=True, help='Decide skew-symmetrizability instead.')
@format_option
@oracle_option
@integer_symmetrizer_option
@handle_errors
def symmetrizable_command(matrix_file, skew, output_format, oracle, integer_symmetrizer):
    """Decide whether FILE is (skew-)symmetrizable and give a symmetrizer"""
    matrix = read_matrix(matrix_file)
    if oracle:
        outcome = _oracle_outcome(matrix, skew)
    elif skew:
        outcome = check_skew_symmetrizable(matrix)
    else:
        outcome = check_symmetrizable(matrix)

    if outcome.verdict:
        witness = outcome.witness
        if integer_symmetrizer:
            witness = integer_normalize_for(witness, matrix)
        ensure_symmetrizer(matrix, witness)
        outcome = SymmetrizeOutcome(True, outcome.kind, witness=witness, pair_inspections=outcome.pair_inspections)

    emit(output_format, outcome.to_dict(), _describe(outcome, skew))
    click.get_current_context().exit(AFFIRMATIVE if outcome.verdict else NEGATIVE)


@click.command('symmetrizer')
@matrix_argument
@format_option
@oracle_option
@integer_symmetrizer_option
@handle_errors
def symmetrizer_command(matrix_file, output_format, oracle, integer_symmetrizer):
    """Construct a symmetrizer for FILE once it is known to be symmetrizable"""
    matrix = read_matrix(matrix_file)
    outcome = _oracle_outcome(matrix) if oracle else check_symmetrizable(matrix)
    if not outcome.verdict:
        emit(output_format, outcome.to_dict(), _describe(outcome, False))
        click.get_current_context().exit(NEGATIVE)

    witness = find_symmetrizer(matrix)
    if integer_symmetrizer:
        witness = integer_normalize_for(witness, matrix)
    ensure_symmetrizer(matrix, witness)
    outcome = SymmetrizeOutcome(True, witness=witness, pair_inspections=outcome.pair_inspections)
    emit(output_format, outcome.to_dict(), _describe(outcome, False))
    click.get_current_context().exit(AFFIRMATIVE)
