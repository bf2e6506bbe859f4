"""Define app-specific constants

Having this file enables:
- Easily making a constant a setting in `realpv.settings` and vice versa;
- Sharing constants between the computational modules and the management
  commands without either importing the other.
"""

''' App Metadata '''

APP_NAME = 'realpv'
VERBOSE_NAME = 'Real Picard-Vessiot toolkit'

''' Logging '''

BASE_LOGGER_NAME = APP_NAME

''' Fields '''

# Tags of the two constant fields; files spell the second one 'Qi'
FIELD_Q = 'Q'
FIELD_QI = 'QI'
FIELD_FILE_NAMES = {
    'Q': FIELD_Q,
    'Qi': FIELD_QI,
    'QI': FIELD_QI,
}

# Name of the differentiation variable
VARIABLE_NAME = 'z'
IMAGINARY_UNIT_NAME = 'i'

''' Orderings '''

PLUS_INFINITY_TOKEN = 'plus-infinity'
MINUS_INFINITY_TOKEN = 'minus-infinity'
AT_POINT_PREFIX = 'at'

''' Exit Codes '''

EXIT_SUCCESS = 0
EXIT_INPUT_ERROR = 1
EXIT_SEMANTIC_ERROR = 2
EXIT_INTERNAL_ERROR = 3

''' Groups '''

GROUP_GL = 'GL'
GROUP_SL = 'SL'
GROUP_SP = 'Sp'
GROUP_SO = 'SO'
GROUP_O = 'O'
GROUP_SU2 = 'SU2'
GROUP_TYPES = (GROUP_GL, GROUP_SL, GROUP_SP, GROUP_SO, GROUP_O, GROUP_SU2)

# Dimension of the realified SU(2) (left regular representation of the quaternions)
SU2_SIZE = 4

''' Cocycle Subcommands '''

COCYCLE_VALIDATE = 'validate'
COCYCLE_TRIVIAL = 'trivial'
COCYCLE_TWIST_FORM = 'twist-form'
COCYCLE_LIFT = 'lift'
COCYCLE_ACTIONS = (COCYCLE_VALIDATE, COCYCLE_TRIVIAL, COCYCLE_TWIST_FORM, COCYCLE_LIFT)
