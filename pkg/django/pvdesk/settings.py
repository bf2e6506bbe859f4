"""Define (default) configuration for the project

This file uses django-configurations. There is no database and no web
stack: the project only hosts the realpv app's management commands.
"""

import os
from os.path import join

from configurations import Configuration, values

import realpv.constants
from pvdesk.constants import LOGS_DIR


class _Django(Configuration):
    """Configure basic Django things"""

    INSTALLED_APPS = [
        # Local
        'realpv',
    ]

    # Nothing is stored; tests use SimpleTestCase
    DATABASES = {}

    SECRET_KEY = values.Value('pvdesk-serves-no-requests')

    USE_TZ = True

    ''' Logging '''

    REALPV_LOG_LEVEL = values.Value('WARNING', environ_prefix=None)
    DJANGO_LOG_LEVEL = values.Value('WARNING', environ_prefix=None)

    # Handlers of the realpv logger; stdout is left to JSON reports
    REALPV_LOG_HANDLERS = ['console']

    @classmethod
    def set_logging(cls):
        handlers = {
            'console': {
                'level': 'DEBUG',
                'class': 'logging.StreamHandler',
                'formatter': 'detailed',
            },
        }
        if 'realpv_file' in cls.REALPV_LOG_HANDLERS:
            os.makedirs(LOGS_DIR, exist_ok=True)
            handlers['realpv_file'] = {
                'level': 'INFO',
                'class': 'logging.FileHandler',
                'filename': join(LOGS_DIR, 'realpv.log'),
                'formatter': 'detailed',
            }

        cls.LOGGING = {
            'version': 1,
            'disable_existing_loggers': False,

            'formatters': {
                'detailed': {
                    'format': '%(levelname)-8s @ %(asctime)s in line:%(lineno)-4d of %(module)-17s : %(message)s'
                },
            },

            'handlers': handlers,

            'loggers': {
                'django': {
                    'level': cls.DJANGO_LOG_LEVEL,
                    'handlers': ['console'],
                    'propagate': True,
                },
                realpv.constants.BASE_LOGGER_NAME: {
                    'level': cls.REALPV_LOG_LEVEL,
                    'handlers': cls.REALPV_LOG_HANDLERS,
                    'propagate': False,
                },
            },
        }

    @classmethod
    def setup(cls):
        super().setup()
        cls.set_logging()


class _RealPV(_Django, Configuration):
    """Configure realpv"""

    ''' Polynomials '''

    REALPV_MAX_FACTOR_DEGREE = values.IntegerValue(24, environ_prefix=None)

    ''' Cohomology '''

    REALPV_HILBERT90_ENTRY_RANGE = values.IntegerValue(3, environ_prefix=None)
    REALPV_HILBERT90_MAX_ATTEMPTS = values.IntegerValue(64, environ_prefix=None)


class _Base(_RealPV, _Django, Configuration):
    """Extract common sub-classes of any full user-facing settings class"""
    pass


class Dev(_Base):
    """Noisy settings for development"""

    DEBUG = True
    REALPV_LOG_LEVEL = values.Value('DEBUG', environ_prefix=None)


class Prod(_Base):
    """Quiet settings that also keep a log file"""

    DEBUG = False
    REALPV_LOG_HANDLERS = ['console', 'realpv_file']
