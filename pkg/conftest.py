"""Configure Django for pytest the same way manage.py does"""

import envdir

from pvdesk.constants import ENVDIR_PATH

envdir.open(ENVDIR_PATH)

import configurations  # noqa: E402

configurations.setup()
