"""
Maximum matching on general graphs and the factor-critical test.

The engine is networkx's blossom implementation (max_weight_matching with
maxcardinality=True and unit weights), which is correct on non-bipartite
graphs. The *_within helpers work on G[mask] without relabeling, so sun
recognition can test cores in place.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx

from .conf import strict_checks
from .exceptions import InconsistencyError
from .graphs import EdgeRef, Graph, bit, iter_bits, popcount

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edges of a host graph"""
    edges: frozenset[EdgeRef]
    covered: int  # bitmask of matched vertices

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_perfect_on(self, mask: int) -> bool:
        return self.covered == mask

    def validate(self, g: Graph, within: int | None = None):
        """Raise InconsistencyError unless every edge is a host edge and edges are disjoint"""
        mask = g.full_mask if within is None else within
        seen = 0
        for e in self.edges:
            if e.v >= g.n or not g.has_edge(e.u, e.v):
                raise InconsistencyError(f"Matching edge {e} is not an edge of {g}")
            if e.mask & ~mask:
                raise InconsistencyError(f"Matching edge {e} leaves the matched vertex set")
            if seen & e.mask:
                raise InconsistencyError(f"Matching edges share an endpoint at {e}")
            seen |= e.mask
        if seen != self.covered:
            raise InconsistencyError("Matching coverage mask does not match its edges")


def maximum_matching_within(g: Graph, mask: int) -> Matching:
    """Maximum-cardinality matching of G[mask], in original labels"""
    if popcount(mask) < 2:
        return Matching(frozenset(), 0)
    pairs = nx.max_weight_matching(g.to_networkx(mask), maxcardinality=True)
    edges = frozenset(EdgeRef(u, v) for u, v in pairs)
    covered = 0
    for e in edges:
        covered |= e.mask
    matching = Matching(edges, covered)
    if strict_checks():
        matching.validate(g, mask)
    return matching


def maximum_matching(g: Graph) -> Matching:
    return maximum_matching_within(g, g.full_mask)


def has_perfect_matching_within(g: Graph, mask: int) -> bool:
    """The empty vertex set has the empty perfect matching"""
    if mask == 0:
        return True
    if popcount(mask) % 2:
        return False
    return maximum_matching_within(g, mask).is_perfect_on(mask)


def has_perfect_matching(g: Graph) -> bool:
    return has_perfect_matching_within(g, g.full_mask)


def is_factor_critical_within(g: Graph, mask: int) -> bool:
    """G[mask] - x has a perfect matching for every x in mask"""
    if mask == 0:
        return False
    result = all(has_perfect_matching_within(g, mask & ~bit(x)) for x in iter_bits(mask))
    if result and strict_checks() and not (popcount(mask) % 2 and g.is_connected(mask)):
        raise InconsistencyError(f"Factor-critical verdict on a disconnected or even vertex set {mask:#x}")
    return result


def is_factor_critical(g: Graph) -> bool:
    return is_factor_critical_within(g, g.full_mask)
