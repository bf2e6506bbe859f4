"""Define the exceptions raised by computations and file parsing

The classes are grouped by what the management commands do with them:
input errors exit with 1, semantic errors with 2 and internal errors with 3
(see `realpv.constants`).
"""

from realpv import constants


class RealPVError(ValueError):
    exit_code = constants.EXIT_INTERNAL_ERROR


# region Input Errors

class InputError(RealPVError):
    exit_code = constants.EXIT_INPUT_ERROR


class ExpressionSyntaxError(InputError):
    pass


class FileFormatError(InputError):
    pass


# endregion


# region Semantic Errors

class SemanticError(RealPVError):
    exit_code = constants.EXIT_SEMANTIC_ERROR


class UnsupportedError(SemanticError):
    pass


class NotCocycleError(SemanticError):
    pass


class GroupMembershipError(SemanticError):
    pass


class NotSemistableError(SemanticError):
    pass


class ExtendConstantsError(SemanticError):
    pass


class LiftInconsistencyError(SemanticError):
    pass


class NoRescalingError(SemanticError):
    pass


class ClassificationError(SemanticError):
    pass


class NotRadicalError(SemanticError):
    pass


class CoefficientCountError(SemanticError):
    pass


# endregion


# region Internal Errors

class CertificateError(RealPVError):
    """A returned certificate failed its own exact check"""
    exit_code = constants.EXIT_INTERNAL_ERROR

# endregion
