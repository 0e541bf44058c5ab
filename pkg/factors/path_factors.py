"""
Exhaustive search for P≥3-factors: spanning subgraphs whose components are
paths on at least three vertices.

Any path on six or more vertices splits into two subpaths of at least three
vertices each, so a graph has a P≥3-factor iff it has one whose paths have
3, 4 or 5 vertices. The search branches only on those orders. When an edge
is required, the path carrying it may need six vertices (a P6 whose middle
edge is required cannot be split around it), so the seeded path is allowed
one vertex more.

The search backtracks over the lowest uncovered vertex and memoizes the
uncovered vertex sets that are known to have no factor.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from .conf import strict_checks
from .exceptions import BudgetExhausted, GraphError, InconsistencyError
from .graphs import EdgeRef, Graph, bit, iter_bits, lowest_bit

logger = logging.getLogger(__name__)

NORMAL_FORM_MAX_ORDER = 5


@dataclass
class SearchStats:
    """Running totals across factor searches"""
    nodes: int = 0
    searches: int = 0

    def merge(self, other: 'SearchStats'):
        self.nodes += other.nodes
        self.searches += other.searches


@dataclass(frozen=True)
class PathFactor:
    """Vertex sequences, each a path of at least three vertices"""
    paths: tuple[tuple[int, ...], ...]

    def edges(self) -> frozenset[EdgeRef]:
        return frozenset(
            EdgeRef(a, b) for p in self.paths for a, b in zip(p, p[1:])
        )

    def validate(self, g: Graph, require: EdgeRef | None = None, forbid: EdgeRef | None = None):
        """Raise InconsistencyError unless this is a P≥3-factor of g honoring require/forbid"""
        covered = 0
        for p in self.paths:
            if len(p) < 3:
                raise InconsistencyError(f"Path {p} has fewer than 3 vertices")
            for v in p:
                if not 0 <= v < g.n:
                    raise InconsistencyError(f"Path {p} leaves the vertex range of {g}")
                if covered >> v & 1:
                    raise InconsistencyError(f"Vertex {v} appears twice in the factor")
                covered |= bit(v)
            for a, b in zip(p, p[1:]):
                if not g.has_edge(a, b):
                    raise InconsistencyError(f"Path {p} uses non-edge {a}-{b}")
        if covered != g.full_mask:
            raise InconsistencyError("Factor does not span the graph")
        edges = self.edges()
        if require is not None and require not in edges:
            raise InconsistencyError(f"Factor misses required edge {require}")
        if forbid is not None and forbid in edges:
            raise InconsistencyError(f"Factor uses forbidden edge {forbid}")


def covers_edge_set(f: PathFactor) -> frozenset[EdgeRef]:
    return f.edges()


class _FactorSearch:
    """One backtracking search over a fixed adjacency"""

    def __init__(self, adjacency: list[int], max_order: int, budget: int | None):
        self.adjacency = adjacency
        self.max_order = max_order
        self.budget = budget
        self.nodes = 0
        self.dead = set()

    def _tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(self.budget, self.nodes)

    def _arms(self, start: int, length: int, avail: int) -> Iterator[tuple[int, ...]]:
        """Paths start-x1-...-x_length with every x_i in avail, start excluded"""
        if length == 0:
            yield ()
            return
        for u in iter_bits(self.adjacency[start] & avail):
            for rest in self._arms(u, length - 1, avail & ~bit(u)):
                yield (u,) + rest

    def _paths_through(self, v: int, mask: int) -> Iterator[tuple[int, ...]]:
        avail = mask & ~bit(v)
        for order in range(3, self.max_order + 1):
            for left_len in range(order):
                for left in self._arms(v, left_len, avail):
                    taken = sum(bit(u) for u in left)
                    for right in self._arms(v, order - 1 - left_len, avail & ~taken):
                        candidate = left[::-1] + (v,) + right
                        # each undirected path once
                        if candidate[0] < candidate[-1]:
                            yield candidate

    def _paths_along(self, e: EdgeRef, mask: int, max_order: int) -> Iterator[tuple[int, ...]]:
        avail = mask & ~e.mask
        for order in range(3, max_order + 1):
            for left_len in range(order - 1):
                for left in self._arms(e.u, left_len, avail):
                    taken = sum(bit(u) for u in left)
                    for right in self._arms(e.v, order - 2 - left_len, avail & ~taken):
                        yield left[::-1] + (e.u, e.v) + right

    def cover(self, mask: int) -> list[tuple[int, ...]] | None:
        if mask == 0:
            return []
        if mask in self.dead:
            return None
        self._tick()

        if any(self.adjacency[v] & mask == 0 for v in iter_bits(mask)):
            self.dead.add(mask)
            return None

        for candidate in self._paths_through(lowest_bit(mask), mask):
            rest = self.cover(mask & ~sum(bit(u) for u in candidate))
            if rest is not None:
                return [candidate] + rest

        self.dead.add(mask)
        return None

    def cover_with(self, e: EdgeRef, mask: int, seed_max_order: int) -> list[tuple[int, ...]] | None:
        self._tick()
        for candidate in self._paths_along(e, mask, seed_max_order):
            rest = self.cover(mask & ~sum(bit(u) for u in candidate))
            if rest is not None:
                return [candidate] + rest
        return None


def _checked_edge(g: Graph, e, role: str) -> EdgeRef:
    e = e if isinstance(e, EdgeRef) else EdgeRef(*e)
    if e.v >= g.n or not g.has_edge(e.u, e.v):
        raise GraphError(f"{role} edge {e} is not an edge of {g}")
    return e


def find_p3_factor(g: Graph, require=None, forbid=None, *,
                   node_budget: int | None = None,
                   max_path_order: int | None = NORMAL_FORM_MAX_ORDER,
                   stats: SearchStats | None = None) -> PathFactor | None:
    """
    Find a P≥3-factor of g containing require and avoiding forbid.

    Returns None when no such factor exists; the search is exhaustive, so
    None is a proof of nonexistence. max_path_order=None searches paths of
    every order (the unrestricted search used to check the normal form).
    Raises BudgetExhausted when node_budget search nodes are not enough.
    """
    require = _checked_edge(g, require, "Required") if require is not None else None
    forbid = _checked_edge(g, forbid, "Forbidden") if forbid is not None else None
    if require is not None and require == forbid:
        raise GraphError(f"Edge {require} cannot be both required and forbidden")

    adjacency = list(g.adjacency)
    if forbid is not None:
        adjacency[forbid.u] &= ~bit(forbid.v)
        adjacency[forbid.v] &= ~bit(forbid.u)

    max_order = g.n if max_path_order is None else min(max_path_order, g.n)
    search = _FactorSearch(adjacency, max_order, node_budget)
    try:
        if require is None:
            paths = search.cover(g.full_mask)
        else:
            paths = search.cover_with(require, g.full_mask, min(g.n, max_order + 1))
    finally:
        if stats is not None:
            stats.nodes += search.nodes
            stats.searches += 1

    if paths is None:
        logger.debug(f"[FACTOR] No factor in {g} (require={require}, forbid={forbid}, "
                     f"nodes={search.nodes})")
        return None

    factor = PathFactor(tuple(paths))
    if strict_checks():
        factor.validate(g, require, forbid)
    return factor


def has_p3_factor(g: Graph, **kwargs) -> bool:
    return find_p3_factor(g, **kwargs) is not None
