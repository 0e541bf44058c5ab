"""
Django's system check, extended with the hypothesis checks of the two
sufficient conditions for uniformity.

Usage:
    python manage.py check thm13 graph.g6
    python manage.py check thm14 graph.txt --k 1 --gamma 1/3
    python manage.py check              # plain Django system check
"""

from django.core.management.commands import check

from factors.exceptions import GraphError
from factors.graphs import read_graph
from factors.management.reporting import ReportingMixin
from factors.parameters import Thm14Params, parse_rational
from factors.serializers import HypothesisReportSerializer
from factors.services import HypothesisService

THEOREMS = ('thm13', 'thm14')


class Command(ReportingMixin, check.Command):
    help = (
        "Checks the entire Django project for potential problems, or with "
        "'thm13 GRAPH' / 'thm14 GRAPH --k K --gamma P/Q' evaluates a hypothesis."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--k', type=int, default=None, help='Connectivity offset k for thm14')
        parser.add_argument('--gamma', default=None, help='Exact rational gamma in [1/3, 1], e.g. 1/3')

    def handle(self, *app_labels, **options):
        if not app_labels or app_labels[0] not in THEOREMS:
            return super().handle(*app_labels, **options)
        self.emit(self.guarded(self.check_hypothesis, *app_labels, **options))

    def check_hypothesis(self, theorem, *rest, **options):
        if len(rest) != 1:
            raise GraphError(f"{theorem} takes exactly one graph argument")
        params = None
        if theorem == 'thm14':
            if options['k'] is None or options['gamma'] is None:
                raise GraphError("thm14 needs --k and --gamma")
            params = Thm14Params(options['k'], parse_rational(options['gamma']))
        report = HypothesisService.check(theorem, read_graph(rest[0]), params)
        return HypothesisReportSerializer(report).data
