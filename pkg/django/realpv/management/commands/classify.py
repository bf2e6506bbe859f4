from realpv import classify
from realpv import exact_linalg
from realpv import expressions
from realpv import field_tower
from realpv import formats
from realpv.management.commands import helpers


class Command(helpers.ReportCommand):
    help = "Identify the real form SO(p,q) of an orthogonal differential module"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        helpers.add_ordering_argument(parser)
        helpers.add_bounds_arguments(parser)
        parser.add_argument('module_file', help="Module file (YAML or JSON), or '-' for standard input.")

    def report(self, **options):
        module_file = formats.read_module_file(options['module_file'])
        bounds = helpers.parse_bounds(options, module_file.field)
        report = classify.classify_orthogonal(module_file.module, options['ordering'], bounds)

        scalar = report.realify_scalar
        return {
            'flat_dim': report.flat_dim,
            'form': expressions.format_matrix(exact_linalg.rows(report.form.matrix)),
            'signature': report.signature.ordered,
            'signature_unordered': list(report.signature_unordered),
            'label': report.form_label,
            'ordering': field_tower.format_ordering(report.ordering),
            'realify_scalar': None if scalar is None else expressions.format_expression(scalar),
            'commentary': report.commentary,
        }
