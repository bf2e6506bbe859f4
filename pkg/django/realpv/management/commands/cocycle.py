from realpv import cohomology
from realpv import constants
from realpv import formats
from realpv.management.commands import helpers


class Command(helpers.ReportCommand):
    help = "Validate cocycles, certify their triviality, twist forms and lift projective cocycles"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        helpers.add_seed_argument(parser)
        parser.add_argument('action', choices=constants.COCYCLE_ACTIONS, help="What to do with the cocycle.")
        parser.add_argument('cocycle_file', help="Cocycle file (YAML or JSON), or '-' for standard input.")

    def report(self, **options):
        cocycle_file = formats.read_cocycle_file(options['cocycle_file'])
        action = options['action']
        seed = options['seed']
        group = cocycle_file.group

        if action == constants.COCYCLE_LIFT:
            projective = cohomology.ProjectiveCocycle(group, cocycle_file.matrix)
            lifted = cohomology.center_lift(projective)
            return {
                'group': str(group),
                'lift': formats.dump_scalar_matrix(lifted.a),
                'valid': True,
            }

        cocycle = cohomology.validate(cocycle_file.matrix, group)

        if action == constants.COCYCLE_VALIDATE:
            return {
                'group': str(group),
                'valid': True,
            }

        if action == constants.COCYCLE_TWIST_FORM:
            twisted = cohomology.twisted_form(cocycle, seed)
            return {
                'group': str(group),
                'twisted_form': formats.dump_scalar_matrix(twisted.form),
                'twisted_signature': twisted.signature.ordered,
                'base_signature': twisted.base_signature.ordered,
                'trivial': twisted.trivial,
                'certificate': formats.dump_scalar_matrix(twisted.certificate.h),
            }

        report = cohomology.triviality_report(cocycle, seed)
        result = {
            'group': str(group),
            'trivial': report.trivial,
            'certificate': None if report.certificate is None else formats.dump_scalar_matrix(report.certificate),
            'needs_extension': report.needs_extension,
            'note': report.note,
        }
        if report.twisted is not None:
            result['twisted_signature'] = report.twisted.signature.ordered
        return result
