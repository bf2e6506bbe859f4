"""Read and write module files, cocycle files and reports

Module files and cocycle files are YAML documents (JSON is valid YAML):

    field: Q                       # or Qi
    matrix: [["1/z", "0"], ["0", "-1/z"]]

    group: {type: SO, form: [1, 1, 1]}     # or {type: SL, n: 2}
    matrix: [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]]

Entries are strings in the expression grammar of `realpv.expressions`;
integers are accepted too. A `form` is either a full matrix or the list of
its diagonal entries. The source '-' stands for standard input.
"""

import json
import logging
import sys
from collections import namedtuple

import yaml
from sympy.polys.domains import QQ, QQ_I

from realpv import constants
from realpv import exact_linalg
from realpv import expressions
from realpv import field_tower
from realpv import settings
from realpv.diffmod import DiffModule
from realpv.exceptions import FileFormatError, RealPVError
from realpv.inverse_problem import GroupSpec

logger = logging.getLogger(constants.BASE_LOGGER_NAME + '.' + __name__)

STDIN_SOURCE = '-'

# Spelling of the field tags in files
_FILE_FIELD_NAMES = {
    constants.FIELD_Q: 'Q',
    constants.FIELD_QI: 'Qi',
}

ModuleFile = namedtuple('ModuleFile', ['field', 'module'])
CocycleFile = namedtuple('CocycleFile', ['group', 'matrix'])


# region Loading

def load(source):
    """Load a YAML document from a path, '-' or an open stream"""
    try:
        if hasattr(source, 'read'):
            return yaml.safe_load(source)
        if source == STDIN_SOURCE:
            return yaml.safe_load(sys.stdin)
        with open(source) as stream:
            return yaml.safe_load(stream)
    except OSError as err:
        raise FileFormatError("cannot read {}: {}".format(source, err.strerror or err))
    except yaml.YAMLError as err:
        raise FileFormatError("cannot parse {}: {}".format(getattr(source, 'name', source), err))


def _require(data, key, kind=None):
    if not isinstance(data, dict) or key not in data:
        raise FileFormatError("missing key {!r}".format(key))
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise FileFormatError("{!r} must be a {}".format(key, kind.__name__))
    return value


def _rows(value, name):
    """Check that a value is a non-empty rectangular list of rows"""
    if not isinstance(value, list) or not value or not all(isinstance(row, list) for row in value):
        raise FileFormatError("{!r} must be a non-empty list of rows".format(name))
    if any(len(row) != len(value[0]) for row in value):
        raise FileFormatError("{!r} has rows of unequal length".format(name))
    return value


def _square_rows(value, name):
    rows = _rows(value, name)
    if len(rows) != len(rows[0]):
        raise FileFormatError("{!r} must be square, got {}x{}".format(name, len(rows), len(rows[0])))
    return rows


def parse_field(value):
    try:
        return constants.FIELD_FILE_NAMES[value]
    except (KeyError, TypeError):
        raise FileFormatError("field must be one of 'Q' or 'Qi', got {!r}".format(value))


def parse_module(data):
    """Build a `ModuleFile` from a loaded document"""
    field = parse_field(_require(data, 'field'))
    rows = _square_rows(_require(data, 'matrix'), 'matrix')
    K = field_tower.rational_function_field(field)
    matrix = exact_linalg.matrix(expressions.parse_matrix(rows, field), K)
    return ModuleFile(field, DiffModule(matrix, field))


def read_module_file(source):
    return parse_module(load(source))


def _scalar_rows(rows, field):
    return [[expressions.parse_scalar(entry, field) for entry in row] for row in rows]


def parse_group(data):
    """Build a `GroupSpec` from its tagged record"""
    if not isinstance(data, dict):
        raise FileFormatError("group must be a mapping with a 'type'")
    variant = _require(data, 'type')
    if variant not in constants.GROUP_TYPES:
        raise FileFormatError("group type must be one of {}, got {!r}".format(
            ', '.join(constants.GROUP_TYPES), variant))

    try:
        if variant in (constants.GROUP_SO, constants.GROUP_O):
            form = _require(data, 'form', list)
            if form and not isinstance(form[0], list):
                form = exact_linalg.diagonal(
                    [expressions.parse_scalar(entry, constants.FIELD_Q) for entry in form], QQ)
            else:
                form = exact_linalg.matrix(_scalar_rows(_square_rows(form, 'form'), constants.FIELD_Q),
                                           QQ)
            return GroupSpec(variant, form.shape[0], form)

        if variant == constants.GROUP_SU2:
            return GroupSpec.su2()

        n = _require(data, 'n', int)
        return GroupSpec(variant, n)
    except RealPVError:
        raise
    except ValueError as err:
        raise FileFormatError("invalid group: {}".format(err))


def parse_cocycle(data):
    """Build a `CocycleFile`; the matrix is over QQ_I and not yet validated"""
    group = parse_group(_require(data, 'group'))
    rows = _square_rows(_require(data, 'matrix'), 'matrix')
    matrix = exact_linalg.matrix(_scalar_rows(rows, constants.FIELD_QI), QQ_I)
    return CocycleFile(group, matrix)


def read_cocycle_file(source):
    return parse_cocycle(load(source))


# endregion


# region Dumping

def dump_module(module):
    """Return the document of a module file"""
    return {
        'field': _FILE_FIELD_NAMES[module.field],
        'matrix': expressions.format_matrix(exact_linalg.rows(module.matrix)),
    }


def dump_scalar_matrix(matrix):
    return [[expressions.format_scalar(entry) for entry in row] for row in exact_linalg.rows(matrix)]


def dump_group(spec):
    data = {'type': spec.variant}
    if spec.is_orthogonal:
        data['form'] = dump_scalar_matrix(spec.form)
    elif spec.variant != constants.GROUP_SU2:
        data['n'] = spec.n
    return data


def dump_cocycle(group, matrix):
    return {
        'group': dump_group(group),
        'matrix': dump_scalar_matrix(matrix),
    }


def to_json(data):
    return json.dumps(data, indent=settings.JSON_INDENT, ensure_ascii=False)


# endregion
