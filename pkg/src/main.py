import os
import sys
import logging
# DON'T CHANGE THIS !!!
sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))

import click

from src.config import log_level
from src.errors import ConfigurationError
from src.commands.common import InputError
from src.commands.symmetrize import symmetrizable_command, symmetrizer_command
from src.commands.positivity import positive_command
from src.commands.companion import companion_command
from src.commands.classify import classify_command


@click.group()
@click.option('-v', '--verbose', is_flag=True, help='Log search and traversal details to stderr.')
def cli(verbose):
    """Classify integer matrices: symmetrizers, positivity and positive quasi-Cartan companions"""
    try:
        level = log_level(verbose)
    except ConfigurationError as e:
        raise InputError(str(e))
    # Configure logging; reports own stdout
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s', force=True)


# Register commands
cli.add_command(symmetrizable_command)
cli.add_command(symmetrizer_command)
cli.add_command(positive_command)
cli.add_command(companion_command)
cli.add_command(classify_command)


def run(argv=None):
    """Run the CLI and return its exit code instead of exiting"""
    try:
        cli.main(args=argv, prog_name='quasicartan')
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else (0 if e.code is None else 2)
    return 0


if __name__ == '__main__':
    sys.exit(run())
