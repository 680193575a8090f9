import click

from src.algorithms.classify import classify
from src.commands.common import (
    AFFIRMATIVE, UNDECIDED, emit, format_option, handle_errors,
    integer_symmetrizer_option, matrix_argument, read_matrix, search_options
)
from src.commands.companion import describe_companion


def _yes_no(value):
    return 'yes' if value else 'no'


def _describe(report):
    lines = [
        f'dimension: {report.input_dims}',
        f'symmetric by signs: {_yes_no(report.symmetric_by_signs)}',
        f'skew-symmetric by signs: {_yes_no(report.skew_symmetric_by_signs)}',
        f'symmetrizable: {_yes_no(report.symmetrizable.verdict)}',
    ]
    if report.symmetrizable.verdict:
        lines.append('  D = diag(' + ', '.join(str(d) for d in report.symmetrizable.witness.diag) + ')')
    lines.append(f'skew-symmetrizable: {_yes_no(report.skew_symmetrizable.verdict)}')
    if report.skew_symmetrizable.verdict:
        lines.append('  D = diag(' + ', '.join(str(d) for d in report.skew_symmetrizable.witness.diag) + ')')
    if report.positive is not None:
        minors = ', '.join(str(minor) for minor in report.positive.minors_checked)
        lines.append(f'positive: {_yes_no(report.positive.positive)} (leading minors {minors})')
    if report.companion is not None:
        lines.extend('companion: ' + line if index == 0 else '  ' + line
                     for index, line in enumerate(describe_companion(report.companion)))
    elif report.companion_undecided:
        lines.append('companion: undecided (search cap reached)')
    lines.append(f'connected: {_yes_no(report.connected)}')
    lines.append('components: ' + ' '.join(
        '{' + ','.join(str(i) for i in block) + '}' for block in report.components.to_dict()
    ))
    return lines


@click.command('classify')
@matrix_argument
@format_option
@search_options
@integer_symmetrizer_option
@handle_errors
def classify_command(matrix_file, output_format, no_prune, no_fastpath, cap, integer_symmetrizer):
    """Run every classification on FILE"""
    matrix = read_matrix(matrix_file)
    report = classify(
        matrix, prune=not no_prune, fastpath=not no_fastpath, cap=cap,
        integer_symmetrizer=integer_symmetrizer
    )
    emit(output_format, report.to_dict(), _describe(report))
    click.get_current_context().exit(UNDECIDED if report.companion_undecided else AFFIRMATIVE)
