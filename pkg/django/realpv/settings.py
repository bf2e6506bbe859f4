"""Read the project settings realpv uses, with defaults

Purpose:
    Lets the computational modules say `settings.MAX_FACTOR_DEGREE` without
    knowing about the project, while the project can still override any
    value as `REALPV_MAX_FACTOR_DEGREE`.

Usage:
    `from realpv import settings`, then read attributes. Every name in
    `_DEFAULTS` is available; anything else raises AttributeError.

Implementation Notes:
    - Values are looked up on every access, so `override_settings` in tests
      takes effect immediately.
    - A project value of None counts as unset.
"""

from django.conf import settings as _project

_PREFIX = 'REALPV_'
_DEFAULTS = {

    ### Polynomials

    # Polynomials of higher degree are rejected before factorization
    'MAX_FACTOR_DEGREE': 24,

    ### Cohomology

    # Initial range {-r..r} for real and imaginary parts of random Hilbert 90 draws
    'HILBERT90_ENTRY_RANGE': 3,

    # Singular draws tolerated before the entry range doubles
    'HILBERT90_MAX_ATTEMPTS': 64,

    ### Command Line

    # Ordering used when `--ordering` is not given
    'DEFAULT_ORDERING': 'plus-infinity',

    # Seed used when `--seed` is not given
    'DEFAULT_SEED': 0,

    # Indentation of JSON reports
    'JSON_INDENT': 2,

}


def __getattr__(name):
    if name not in _DEFAULTS:
        raise AttributeError("realpv has no setting {!r}".format(name))
    value = getattr(_project, _PREFIX + name, None)
    return _DEFAULTS[name] if value is None else value


def __dir__():
    return sorted(_DEFAULTS)
