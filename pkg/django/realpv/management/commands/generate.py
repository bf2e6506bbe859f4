from realpv import constants
from realpv import expressions
from realpv import formats
from realpv import inverse_problem
from realpv.exceptions import RealPVError
from realpv.management.commands import helpers


class Command(helpers.ReportCommand):
    help = "Print a module file y' = Ay with A(z) a general element of the Lie algebra of a group"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        helpers.add_seed_argument(parser, optional=True)
        parser.add_argument('--group', '-g', dest='group', required=True, choices=constants.GROUP_TYPES,
                            help="Group type.")
        parser.add_argument('--n', dest='n', type=int, default=None,
                            help="Matrix size for GL, SL and Sp.")
        parser.add_argument('--form', dest='form', default=None,
                            help="Diagonal of the form of SO and O, e.g. '1,1,-1'.")
        parser.add_argument('--coeffs', dest='coeffs', default=None,
                            help="Comma-separated coefficients f_j of the Lie basis.")
        parser.add_argument('--field', dest='field', default='Q', choices=('Q', 'Qi'),
                            help="Field of the coefficients given with --coeffs.")

    def group_spec(self, options):
        variant = options['group']
        try:
            if variant in (constants.GROUP_SO, constants.GROUP_O):
                if not options['form']:
                    raise helpers.input_error("--group {} needs --form".format(variant))
                diagonal = [expressions.parse_scalar(entry, constants.FIELD_Q)
                            for entry in options['form'].split(',')]
                if variant == constants.GROUP_SO:
                    return inverse_problem.GroupSpec.so(diagonal)
                return inverse_problem.GroupSpec.o(diagonal)
            if variant == constants.GROUP_SU2:
                return inverse_problem.GroupSpec.su2()
            if options['n'] is None:
                raise helpers.input_error("--group {} needs --n".format(variant))
            return inverse_problem.GroupSpec(variant, options['n'])
        except RealPVError:
            raise
        except ValueError as err:
            raise helpers.input_error(str(err))

    def report(self, **options):
        spec = self.group_spec(options)

        coeffs = None
        if options['coeffs'] is not None:
            field = formats.parse_field(options['field'])
            coeffs = [expressions.parse_expression(entry, field) for entry in options['coeffs'].split(',')]

        module = inverse_problem.generate_equation(spec, coeffs, options['seed'])
        return formats.dump_module(module)
