"""
Print a named graph as graph6 (or as an edge list).

Usage:
    python manage.py gen remark1 0
    python manage.py gen remark2 2
    python manage.py gen family cycle 5 --edge-list
    python manage.py gen family complete_bipartite 2 3
    python manage.py gen family copies 4 complete 2     # 4K2
"""

from django.core.management.base import BaseCommand

from factors.exceptions import GraphError
from factors.graphs import FAMILIES, family, remark1_graph, remark2_graph, to_edge_list, to_graph6
from factors.management.reporting import ReportingMixin

FAMILY_NAMES = sorted(FAMILIES)


def parse_ints(tokens) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise GraphError(f"Expected integer parameters, got {' '.join(tokens)}")


def build_family(tokens: list[str]):
    """'copies M <family> ...' nests a base family; every other family takes integers"""
    if not tokens or tokens[0] not in FAMILY_NAMES:
        raise GraphError(f"gen family expects one of {FAMILY_NAMES}")
    name, rest = tokens[0], tokens[1:]
    if name == 'copies':
        if len(rest) < 2:
            raise GraphError("copies takes a count and a base family, e.g. copies 4 complete 2")
        return family('copies', *parse_ints(rest[:1]), build_family(rest[1:]))
    return family(name, *parse_ints(rest))


def build(kind: str, params: list[str]):
    if kind == 'family':
        return build_family(params)

    values = parse_ints(params)
    if len(values) != 1:
        raise GraphError(f"{kind} takes exactly one integer parameter")
    return remark1_graph(values[0]) if kind == 'remark1' else remark2_graph(values[0])


class Command(ReportingMixin, BaseCommand):
    help = 'Generate a sharpness construction or a standard graph'

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=['remark1', 'remark2', 'family'])
        parser.add_argument('params', nargs='+')
        parser.add_argument('--edge-list', action='store_true', help='Write an edge list instead of graph6')

    def handle(self, *args, **options):
        g = self.guarded(build, options['kind'], options['params'])
        self.stdout.write(to_edge_list(g) if options['edge_list'] else to_graph6(g))
