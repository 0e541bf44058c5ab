"""
Report every parameter and verdict for one graph.

Usage:
    python manage.py analyze 'Bw'
    python manage.py analyze graphs/petersen.txt --node-budget 100000
"""

from factors.graphs import read_graph
from factors.management.reporting import ReportCommand
from factors.serializers import GraphAnalysisSerializer
from factors.services import AnalysisService


class Command(ReportCommand):
    help = 'Analyze a graph given as graph6 text or a graph file'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='graph6 string, or a file holding graph6 or an edge list')
        parser.add_argument(
            '--node-budget',
            type=int,
            default=None,
            help='Search node budget per factor search (0 = unlimited; default from settings)',
        )

    def report(self, *args, **options):
        g = read_graph(options['graph'])
        analysis = AnalysisService.analyze(g, node_budget=options['node_budget'])
        return GraphAnalysisSerializer(analysis).data
