from realpv import diffmod
from realpv import expressions
from realpv import formats
from realpv.management.commands import helpers


class Command(helpers.ReportCommand):
    help = "Print a basis of the rational flat sections of a differential module"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        helpers.add_bounds_arguments(parser)
        parser.add_argument('module_file', help="Module file (YAML or JSON), or '-' for standard input.")

    def report(self, **options):
        module_file = formats.read_module_file(options['module_file'])
        bounds = helpers.parse_bounds(options, module_file.field)
        basis = diffmod.flat_sections(module_file.module, bounds)
        return {
            'basis': [[expressions.format_expression(entry) for entry in vector] for vector in basis.vectors],
            'complete': basis.complete,
        }
