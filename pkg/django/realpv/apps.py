"""Register app with Django"""

from django.apps import AppConfig

from realpv.constants import APP_NAME, VERBOSE_NAME


class RealpvConfig(AppConfig):
    name = APP_NAME
    verbose_name = VERBOSE_NAME
