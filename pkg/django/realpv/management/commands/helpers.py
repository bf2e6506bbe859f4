"""Define common functionality and helpers for management commands"""

import logging
import sys

from IPython.core import ultratb
from django.core.management import CommandError
from django.core.management.base import BaseCommand

from realpv import constants
from realpv import expressions
from realpv import field_tower
from realpv import formats
from realpv import loggers
from realpv import settings
from realpv.diffmod import SolverBounds
from realpv.exceptions import RealPVError

logger = logging.getLogger(constants.BASE_LOGGER_NAME + '.' + __name__)

DEBUG_OPTION_NAME = 'debug'
TEXT_OPTION_NAME = 'text'

# Options every command has, left out of command logs
_COMMON_OPTIONS = ('verbosity', 'settings', 'pythonpath', 'traceback', 'no_color', 'force_color',
                   'skip_checks', DEBUG_OPTION_NAME, TEXT_OPTION_NAME)


# region Misc

def install_post_mortem(options):
    """Route uncaught exceptions into a pdb session when `--debug` is on

    Returns the installed hook, or None when the option is off. Colors are
    only used when standard error is a terminal.
    """
    if not options.get(DEBUG_OPTION_NAME):
        return None
    scheme = 'Linux' if sys.stderr.isatty() else 'NoColor'
    sys.excepthook = ultratb.FormattedTB(mode='Verbose', color_scheme=scheme, call_pdb=True)
    return sys.excepthook


def input_error(message):
    return CommandError(message, returncode=constants.EXIT_INPUT_ERROR)


def render_text(value, indent=0):
    """Render a JSON-like report as indented `key: value` lines"""
    pad = '  ' * indent
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _is_flat_list(item):
                lines.append('{}{}:'.format(pad, key))
                lines.extend(render_text(item, indent + 1))
            else:
                lines.append('{}{}: {}'.format(pad, key, _render_scalar(item)))
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and not _is_flat_list(item):
                lines.append('{}-'.format(pad))
                lines.extend(render_text(item, indent + 1))
            else:
                lines.append('{}- {}'.format(pad, _render_scalar(item)))
    else:
        lines.append(pad + _render_scalar(value))
    return lines


def _is_flat_list(value):
    return isinstance(value, list) and not any(isinstance(item, (dict, list)) for item in value)


def _render_scalar(value):
    if isinstance(value, list):
        return '[{}]'.format(', '.join(_render_scalar(item) for item in value))
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    return str(value)


# endregion


# region Management Command CLI Arguments

def add_debug_argument(parser):
    parser.add_argument('--debug', '-d',
                        action='store_true', dest=DEBUG_OPTION_NAME, default=False,
                        help="Launch a pdb session on encountering an exception.")


def add_text_argument(parser):
    parser.add_argument('--text', '-t',
                        action='store_true', dest=TEXT_OPTION_NAME, default=False,
                        help="Print a human-readable report instead of JSON.")


def add_ordering_argument(parser, repeatable=False):
    help_text = "Ordering of Q(z): plus-infinity, minus-infinity, at:<rational>:+ or at:<rational>:-."
    if repeatable:
        parser.add_argument('--ordering', '-o', action='append', dest='orderings', default=None,
                            type=field_tower.parse_ordering, help=help_text + " May be repeated.")
    else:
        parser.add_argument('--ordering', '-o', dest='ordering', default=settings.DEFAULT_ORDERING,
                            type=field_tower.parse_ordering, help=help_text)


def add_bounds_arguments(parser):
    parser.add_argument('--pole', action='append', dest='poles', default=None, metavar='FACTOR:ORDER',
                        help="Bound the pole order of flat sections along a polynomial. May be repeated.")
    parser.add_argument('--degree', type=int, dest='degree', default=None,
                        help="Bound the numerator degree of flat sections.")


def add_seed_argument(parser, optional=False):
    """Add `--seed`, defaulting to the DEFAULT_SEED setting unless optional"""
    default = None if optional else settings.DEFAULT_SEED
    parser.add_argument('--seed', '-s', type=int, dest='seed', default=default,
                        help="Seed of random choices.")


def parse_bounds(options, field):
    """Return the `SolverBounds` of the `--pole` and `--degree` options, or None"""
    pole_orders = {}
    for text in options.get('poles') or ():
        factor_text, separator, order_text = text.rpartition(':')
        if not separator:
            raise input_error("--pole expects FACTOR:ORDER, got {!r}".format(text))
        try:
            order = int(order_text)
        except ValueError:
            raise input_error("invalid pole order {!r}".format(order_text))

        factor = expressions.parse_expression(factor_text, field)
        numer, denom = field_tower.numer_denom(factor)
        if denom.degree() or numer.degree() < 1:
            raise input_error("--pole needs a nonconstant polynomial, got {!r}".format(factor_text))
        pole_orders[numer.monic()] = order

    bounds = SolverBounds(pole_orders, options.get('degree'))
    return bounds if bounds else None


# endregion


# region Base Command

def _parser_error(parser, message):
    """Report argument errors as input errors (exit 1)"""
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(constants.EXIT_INPUT_ERROR, "{}: error: {}\n".format(parser.prog, message))
    raise input_error("Error: {}".format(message))


class ReportCommand(BaseCommand):
    """Run a computation and print its report as JSON (or text with `--text`)

    Subclasses implement `report(**options)` returning a JSON-like dict.
    Errors of the computation become `CommandError`s whose return code is
    the exit code of the error class; anything else exits with 3.
    """

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = lambda message: _parser_error(parser, message)
        return parser

    def add_arguments(self, parser):
        add_debug_argument(parser)
        add_text_argument(parser)

    def report(self, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        install_post_mortem(options)
        loggers.log_command(self.__module__.rsplit('.', 1)[-1],
                            **{key: value for key, value in options.items() if key not in _COMMON_OPTIONS})

        try:
            report = self.report(**options)
        except CommandError:
            raise
        except RealPVError as err:
            if options[DEBUG_OPTION_NAME]:
                raise
            raise CommandError(str(err), returncode=err.exit_code)
        except Exception as err:
            if options[DEBUG_OPTION_NAME]:
                raise
            logger.error("internal error", exc_info=True)
            raise CommandError("internal error: {}".format(err), returncode=constants.EXIT_INTERNAL_ERROR)

        if options[TEXT_OPTION_NAME]:
            self.stdout.write('\n'.join(render_text(report)))
        else:
            self.stdout.write(formats.to_json(report))

# endregion
