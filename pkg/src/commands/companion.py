import click

from src.algorithms.classify import ensure_companion
from src.algorithms.companion import find_positive_companion
from src.algorithms.oracle import exhaustive_companion
from src.algorithms.symmetrize import check_skew_symmetrizable
from src.commands.common import (
    AFFIRMATIVE, NEGATIVE, emit, format_option, format_rows, handle_errors,
    matrix_argument, oracle_option, read_matrix, search_options
)
from src.errors import NotSkewSymmetrizableError


def describe_companion(result):
    lines = [result.message]
    if result.found:
        lines.extend(format_rows(result.companion))
    lines.append(f'assignments tried: {result.assignments_tried}, fast path: {result.fast_path}')
    return lines


@click.command('companion')
@matrix_argument
@format_option
@oracle_option
@search_options
@handle_errors
def companion_command(matrix_file, output_format, oracle, no_prune, no_fastpath, cap):
    """Search for a positive quasi-Cartan companion of the skew-symmetrizable matrix in FILE"""
    matrix = read_matrix(matrix_file)
    if oracle:
        if not check_skew_symmetrizable(matrix).verdict:
            raise NotSkewSymmetrizableError('matrix is not skew-symmetrizable')
        result = exhaustive_companion(matrix)
    else:
        result = find_positive_companion(matrix, prune=not no_prune, fastpath=not no_fastpath, cap=cap)
    ensure_companion(matrix, result)

    emit(output_format, result.to_dict(), describe_companion(result))
    click.get_current_context().exit(AFFIRMATIVE if result.found else NEGATIVE)
