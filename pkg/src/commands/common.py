import json
import logging
from functools import wraps

import click

from src.config import CAP_ENV_VAR
from src.errors import MatrixFormatError, QuasiCartanError, SearchCapExceeded
from src.models.matrix import parse_matrix

logger = logging.getLogger(__name__)

# Exit codes
AFFIRMATIVE = 0
NEGATIVE = 1
INPUT_ERROR = 2
UNDECIDED = 3


class InputError(click.ClickException):
    exit_code = INPUT_ERROR


class UndecidedError(click.ClickException):
    exit_code = UNDECIDED


def matrix_argument(f):
    return click.argument('matrix_file', metavar='FILE', type=click.File('r'))(f)


def format_option(f):
    return click.option(
        '--format', 'output_format', type=click.Choice(['text', 'json']),
        default='text', show_default=True, help='Report format on stdout.'
    )(f)


def oracle_option(f):
    return click.option(
        '--oracle', is_flag=True,
        help='Use the slow reference implementations (small matrices only).'
    )(f)


def integer_symmetrizer_option(f):
    return click.option(
        '--integer-symmetrizer', is_flag=True,
        help='Report the smallest positive integer symmetrizer on each component.'
    )(f)


def search_options(f):
    f = click.option(
        '--cap', type=click.IntRange(min=1), envvar=CAP_ENV_VAR, default=None,
        help=f'Companion search budget in assignments [env: {CAP_ENV_VAR}; default 2^24].'
    )(f)
    f = click.option('--no-fastpath', is_flag=True, help='Skip the decisions that avoid searching.')(f)
    f = click.option('--no-prune', is_flag=True, help='Enumerate every sign assignment.')(f)
    return f


def handle_errors(f):
    """Map library errors to exit codes; JSON mode also gets an error envelope on stdout"""
    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except SearchCapExceeded as e:
            _echo_error(kwargs, e)
            raise UndecidedError(str(e))
        except QuasiCartanError as e:
            _echo_error(kwargs, e)
            raise InputError(str(e))
    return wrapper


def _echo_error(kwargs, error):
    logger.error(f'{type(error).__name__}: {error}')
    if kwargs.get('output_format') == 'json':
        click.echo(dumps({'success': False, 'error': str(error)}))


def read_matrix(matrix_file):
    try:
        text = matrix_file.read()
    except UnicodeDecodeError as e:
        prefix = e.object[:e.start]
        line = prefix.count(b'\n') + 1
        column = e.start - (prefix.rfind(b'\n') + 1) + 1
        raise MatrixFormatError(f'undecodable byte 0x{e.object[e.start]:02x} ({e.reason})', line, column)
    return parse_matrix(text)


def dumps(payload):
    return json.dumps(payload, sort_keys=True, indent=2)


def emit(output_format, payload, text_lines):
    if output_format == 'json':
        click.echo(dumps(payload))
    else:
        for line in text_lines:
            click.echo(line)


def format_rows(matrix):
    width = max((len(str(value)) for row in matrix.rows for value in row), default=1)
    return ['  ' + ' '.join(str(value).rjust(width) for value in row) for row in matrix.rows]
