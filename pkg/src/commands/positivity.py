import click

from src.algorithms.oracle import cycle_symmetrizable, principal_minors_verdict
from src.algorithms.positivity import is_positive
from src.algorithms.symmetrize import check_symmetrizable
from src.commands.common import (
    AFFIRMATIVE, NEGATIVE, emit, format_option, handle_errors,
    matrix_argument, oracle_option, read_matrix
)
from src.errors import NotSymmetrizableError


@click.command('positive')
@matrix_argument
@format_option
@oracle_option
@handle_errors
def positive_command(matrix_file, output_format, oracle):
    """Decide whether the symmetrizable matrix in FILE is positive"""
    matrix = read_matrix(matrix_file)
    symmetrizable = cycle_symmetrizable(matrix) if oracle else check_symmetrizable(matrix).verdict
    if not symmetrizable:
        raise NotSymmetrizableError('positivity is only decided for symmetrizable matrices')

    verdict = principal_minors_verdict(matrix) if oracle else is_positive(matrix)
    lines = [f'positive: {"yes" if verdict.positive else "no"}']
    if oracle:
        lines[0] += ' (all principal minors, cofactor expansion)'
    lines.append('leading minors: ' + ', '.join(str(minor) for minor in verdict.minors_checked))
    if not verdict.positive:
        lines.append(f'first failure at size {verdict.first_failure}')

    emit(output_format, verdict.to_dict(), lines)
    click.get_current_context().exit(AFFIRMATIVE if verdict.positive else NEGATIVE)
