"""
Validate a criterion or sufficient condition over a scope of graphs.

Usage:
    python manage.py validate thm11 --nmin 1 --nmax 7
    python manage.py validate thm13 --nmin 5 --nmax 8
    python manage.py validate thm14 --k 1 --gamma 1/3 --nmin 8 --nmax 9
    python manage.py validate thm13 --random 5000 --orders 9,10 --seed 1 --p 3/4
    python manage.py validate thm12 --replay 'Ch'

Exit status is 2 when a counterexample or disagreement was found, 3 when
nothing failed but some graphs ran out of search budget.
"""

from django.core.management.base import CommandError

from factors.exceptions import GraphError
from factors.management.reporting import EXIT_BUDGET, EXIT_INCONSISTENT, ReportCommand
from factors.parameters import Thm14Params, parse_rational
from factors.serializers import ValidationReportSerializer, exact
from factors.services import VALIDATION_TARGETS, ValidationScope, ValidationService


def parse_orders(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(',') if part.strip())
    except ValueError:
        raise GraphError(f"--orders expects comma separated integers, got {text!r}")


class Command(ReportCommand):
    help = 'Exhaustively or randomly validate a theorem or an engine against its oracle'

    def add_arguments(self, parser):
        parser.add_argument('target', choices=VALIDATION_TARGETS)
        parser.add_argument('--nmin', type=int, default=1, help='Smallest exhaustive order')
        parser.add_argument('--nmax', type=int, default=0, help='Largest exhaustive order (0 = none)')
        parser.add_argument('--random', type=int, default=0, dest='random_count',
                            help='Random graphs per order in --orders')
        parser.add_argument('--orders', default='', help='Comma separated orders for random graphs')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--p', default='1/2', help='Exact edge probability for random graphs')
        parser.add_argument('--k', type=int, default=None)
        parser.add_argument('--gamma', default=None)
        parser.add_argument('--node-budget', type=int, default=None)
        parser.add_argument('--replay', default=None, metavar='GRAPH6',
                            help='Re-examine one graph from an earlier report')

    def report(self, *args, **options):
        target = options['target']
        params = None
        if target == 'thm14':
            if options['k'] is None or options['gamma'] is None:
                raise GraphError("thm14 needs --k and --gamma")
            params = Thm14Params(options['k'], parse_rational(options['gamma']))

        if options['replay']:
            outcome = ValidationService.replay(target, options['replay'], params,
                                               node_budget=options['node_budget'])
            return exact({'theorem': target, 'graph6': options['replay'], 'hypothesis_hit': outcome.hit,
                          'counterexample': outcome.counterexample, 'disagreement': outcome.disagreement})

        scope = ValidationScope(
            nmin=options['nmin'],
            nmax=options['nmax'],
            random_count=options['random_count'],
            random_orders=parse_orders(options['orders']),
            seed=options['seed'],
            edge_prob=parse_rational(options['p']),
            node_budget=options['node_budget'],
        )
        report = ValidationService.validate(target, scope, params)
        self.emit(ValidationReportSerializer(report).data)

        if not report.passed:
            raise CommandError(f"{target}: {len(report.counterexamples)} counterexamples, "
                               f"{len(report.disagreements)} disagreements", returncode=EXIT_INCONSISTENT)
        if report.budget_exhausted:
            raise CommandError(f"{target}: {len(report.budget_exhausted)} graphs exhausted the search budget",
                               returncode=EXIT_BUDGET)
        return None

    def handle(self, *args, **options):
        data = self.guarded(self.report, *args, **options)
        if data is not None:
            self.emit(data)
