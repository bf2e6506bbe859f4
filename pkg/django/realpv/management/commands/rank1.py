from realpv import classify
from realpv import constants
from realpv import expressions
from realpv import field_tower
from realpv import settings
from realpv.management.commands import helpers


class Command(helpers.ReportCommand):
    help = "Analyze y' = r*y with a radical solution and compare its real Picard-Vessiot candidates"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        helpers.add_ordering_argument(parser, repeatable=True)
        parser.add_argument('expression', help="The coefficient r, a rational function of z over Q.")

    def report(self, **options):
        r = expressions.parse_expression(options['expression'], constants.FIELD_Q)
        orderings = options['orderings'] or [field_tower.parse_ordering(settings.DEFAULT_ORDERING)]
        report = classify.rank1_analyze(r)

        candidates = []
        for candidate in report.candidates:
            radicand = expressions.format_expression(candidate.radicand)
            candidates.append({
                'field': candidate.description(report.m),
                'radicand': radicand,
                'constraint': "sign({}) > 0".format(radicand) if candidate.constrained else None,
            })

        verdicts = []
        for ordering in orderings:
            comparison = classify.compare_real_pv(report, ordering)
            verdicts.append({
                'ordering': field_tower.format_ordering(ordering),
                'candidates': [{'field': verdict.candidate.description(report.m), 'compatible': verdict.compatible}
                               for verdict in comparison.verdicts],
                'commentary': comparison.commentary,
            })

        return {
            'r': expressions.format_expression(report.r),
            'm': report.m,
            'u': expressions.format_expression(report.u),
            'rational': report.is_rational,
            'pv_description': report.pv_description,
            'candidates': candidates,
            'verdicts': verdicts,
        }
