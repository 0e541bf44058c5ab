from fractions import Fraction

import factory

from factors.enumeration import Mode, enumerate_graphs
from factors.graphs import Graph


class GraphFactory(factory.Factory):
    """Seeded G(n, p) graphs; each instance draws from its own sequence seed"""

    class Meta:
        model = Graph

    n = 7
    edge_prob = Fraction(1, 2)
    seed = factory.Sequence(lambda i: 1000 + i)
    mode = Mode.RANDOM

    @classmethod
    def _create(cls, model_class, n, edge_prob, seed, mode):
        return next(enumerate_graphs(n, mode, count=1, edge_prob=edge_prob, seed=seed))

    _build = _create


class ConnectedGraphFactory(GraphFactory):
    mode = Mode.RANDOM_CONNECTED
    edge_prob = Fraction(3, 5)
