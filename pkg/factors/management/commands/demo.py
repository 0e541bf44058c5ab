"""
Run a sharpness construction and print its identities and witness.

Usage:
    python manage.py demo remark1 --t 0
    python manage.py demo remark2 --k 2 --b 2
    python manage.py demo remark1 --t 2 --witness-only
"""

from factors.management.reporting import ReportCommand
from factors.serializers import SharpnessReportSerializer
from factors.services import CONSTRUCTIONS, SharpnessService


class Command(ReportCommand):
    help = 'Show that the degree and neighborhood conditions cannot be relaxed'

    def add_arguments(self, parser):
        parser.add_argument('construction', choices=CONSTRUCTIONS)
        parser.add_argument('--t', type=int, default=0, help='remark1: K_{3+t} joined with (4+2t)K2')
        parser.add_argument('--k', type=int, default=1, help='remark2: K_{k+1} joined with (2k+1)K2')
        parser.add_argument('--b', type=int, default=None,
                            help='remark2: gamma = b/(2k+1) (default: smallest b with gamma >= 1/3)')
        mode = parser.add_mutually_exclusive_group()
        mode.add_argument('--full', action='store_true', dest='full', default=None,
                          help='Also decide uniformity by brute force')
        mode.add_argument('--witness-only', action='store_false', dest='full', default=None,
                          help='Only verify the deletion witness')
        parser.add_argument('--node-budget', type=int, default=None)

    def report(self, *args, **options):
        report = SharpnessService.sharpness_demo(
            options['construction'], t=options['t'], k=options['k'], b=options['b'],
            full_check=options['full'], node_budget=options['node_budget'],
        )
        return SharpnessReportSerializer(report).data
