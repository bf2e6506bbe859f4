"""Log the noteworthy events of computations and commands"""

import logging
from collections import OrderedDict
from functools import wraps

from realpv.constants import BASE_LOGGER_NAME

logger = logging.getLogger(BASE_LOGGER_NAME + '.' + __name__)


# region Helpers

def _format_info(info):
    """Render an OrderedDict as `key=value` pairs in insertion order"""
    return ', '.join('{}={}'.format(key, value) for key, value in info.items())


def _catch_errors(function):
    """Swallow and report any error raised while logging an event"""

    @wraps(function)
    def decorated(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except Exception:
            logger.error("could not log %s", function.__name__, exc_info=True)

    return decorated


# endregion


# region Loggers

@_catch_errors
def log_solver_bounds(dim, pole_bounds, degree, complete):
    info = OrderedDict()
    info['dim'] = dim
    info['poles'] = ['{}^{}'.format(factor.as_expr(), order) for factor, order in pole_bounds]
    info['degree'] = degree
    info['complete'] = complete
    logger.debug("rational solutions ansatz: {}".format(_format_info(info)))


@_catch_errors
def log_certificate(kind, attempts, entry_range):
    info = OrderedDict()
    info['attempts'] = attempts
    info['entry_range'] = entry_range
    logger.debug("{} certificate found: {}".format(kind, _format_info(info)))


@_catch_errors
def log_singular_draws(attempts, entry_range):
    logger.info("{} singular Hilbert 90 draws; widening entry range to {}".format(attempts, entry_range))


@_catch_errors
def log_classification(report):
    info = OrderedDict()
    info['flat_dim'] = report.flat_dim
    info['signature'] = report.signature.ordered
    info['label'] = report.form_label
    info['ordering'] = str(report.ordering)
    logger.info("orthogonal classification: {}".format(_format_info(info)))


@_catch_errors
def log_rank1(report):
    info = OrderedDict()
    info['m'] = report.m
    info['u'] = str(report.u.as_expr())
    info['candidates'] = len(report.candidates)
    logger.info("rank-1 analysis: {}".format(_format_info(info)))


@_catch_errors
def log_command(name, **options):
    info = OrderedDict(sorted((key, value) for key, value in options.items() if value is not None))
    logger.debug("command {}: {}".format(name, _format_info(info)))

# endregion
