"""
Structural criteria for P≥3-factors and their brute-force counterparts.

  kaneko_check               sun(G-X) <= 2|X| for all X  (iff G has a P≥3-factor)
  covered_check_criterion    sun(G-X) <= 2|X| - eps(X)   (iff connected G is covered)
  covered_check_bruteforce   every edge lies on some factor found by search
  is_uniform                 G - e is covered for every edge e

X is enumerated by ascending size and lexicographically within a size, so a
reported witness is the lexicographically least violating X of minimum size.
Once 2|X| - 2 >= n - |X| the bound exceeds the number of components G - X
can have, and larger X need not be examined.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, NamedTuple

from .conf import strict_checks
from .exceptions import GraphError, InconsistencyError
from .graphs import EdgeRef, Graph, VertexSet, bit, delete_edge, to_graph6
from .path_factors import SearchStats, find_p3_factor
from .suns import count_suns_within, epsilon_mask

logger = logging.getLogger(__name__)

KANEKO = 'sun(G-X) <= 2|X|'
COVERED = 'sun(G-X) <= 2|X| - eps(X)'


@dataclass(frozen=True)
class CriterionVerdict:
    """
    Outcome of a criterion over all X. On failure witness_x is the violating
    set and sun_count / bound / epsilon are the values at it.
    """
    criterion: str
    holds: bool
    witness_x: VertexSet | None = None
    sun_count: int | None = None
    bound: int | None = None
    epsilon: int | None = None
    subsets_examined: int = 0


class CoveredVerdict(NamedTuple):
    covered: bool
    uncovered_edge: EdgeRef | None = None
    edgeless: bool = False


@dataclass(frozen=True)
class UniformVerdict:
    uniform: bool
    witness_edge: EdgeRef | None = None
    # coveredness verdict for G - witness_edge
    inner: CoveredVerdict | CriterionVerdict | None = None
    route: str = 'bruteforce'


@dataclass
class ConsistencyReport:
    graph6: str
    has_factor: bool
    kaneko_holds: bool
    covered_bruteforce: bool | None = None
    covered_criterion: bool | None = None
    disagreements: list[str] = field(default_factory=list)
    kaneko: CriterionVerdict | None = None

    @property
    def consistent(self) -> bool:
        return not self.disagreements

    def raise_if_inconsistent(self):
        if self.disagreements:
            raise InconsistencyError(f"{self.graph6}: " + "; ".join(self.disagreements))


def _first_violation(g: Graph, criterion: str, bound_of: Callable[[int, int], tuple[int, int]],
                     prune: bool) -> CriterionVerdict:
    n = g.n
    examined = 0
    for size in range(n + 1):
        if prune and 2 * size - 2 >= n - size:
            break
        for combo in combinations(range(n), size):
            x = sum(bit(v) for v in combo)
            examined += 1
            suns = count_suns_within(g, g.full_mask & ~x)
            bound, eps = bound_of(x, size)
            if suns > bound:
                verdict = CriterionVerdict(criterion, False, VertexSet(n, x), suns, bound, eps, examined)
                if strict_checks():
                    _recheck_witness(g, verdict)
                return verdict
    return CriterionVerdict(criterion, True, subsets_examined=examined)


def _recheck_witness(g: Graph, verdict: CriterionVerdict):
    x = verdict.witness_x.mask
    suns = count_suns_within(g, g.full_mask & ~x)
    size = len(verdict.witness_x)
    eps = epsilon_mask(g, x) if verdict.criterion == COVERED else None
    bound = 2 * size - (eps or 0)
    if (suns, bound, eps) != (verdict.sun_count, verdict.bound, verdict.epsilon) or suns <= bound:
        raise InconsistencyError(f"Criterion witness {verdict.witness_x} does not re-check on {g}")


def kaneko_check(g: Graph, *, prune: bool = True) -> CriterionVerdict:
    """sun(G-X) <= 2|X| for every X; holds iff g has a P≥3-factor"""
    verdict = _first_violation(g, KANEKO, lambda x, size: (2 * size, None), prune)
    logger.debug(f"[CRITERION] {KANEKO} on {g}: holds={verdict.holds}")
    return verdict


def covered_check_criterion(g: Graph, *, prune: bool = True) -> CriterionVerdict:
    """sun(G-X) <= 2|X| - eps(X) for every X; holds iff connected g is P≥3-factor covered"""
    if not g.is_connected():
        raise GraphError(f"The covered-graph criterion needs a connected graph; {g} is disconnected")

    def bound_of(x, size):
        eps = epsilon_mask(g, x)
        return 2 * size - eps, eps

    verdict = _first_violation(g, COVERED, bound_of, prune)
    logger.debug(f"[CRITERION] {COVERED} on {g}: holds={verdict.holds}")
    return verdict


def covered_check_bruteforce(g: Graph, *, node_budget: int | None = None,
                             stats: SearchStats | None = None) -> CoveredVerdict:
    """
    True iff g has an edge and every edge lies on some P≥3-factor.

    Edges are tried in ascending order; every edge of a factor found along
    the way counts as covered, so the reported uncovered edge is the least
    edge no factor contains.
    """
    edges = g.edges()
    if not edges:
        return CoveredVerdict(False, None, edgeless=True)

    covered = set()
    for e in edges:
        if e in covered:
            continue
        factor = find_p3_factor(g, require=e, node_budget=node_budget, stats=stats)
        if factor is None:
            return CoveredVerdict(False, e)
        covered |= factor.edges()
    return CoveredVerdict(True)


def is_uniform(g: Graph, *, node_budget: int | None = None, use_criterion: bool = False,
               stats: SearchStats | None = None) -> UniformVerdict:
    """
    G - e is P≥3-factor covered for every edge e.

    With use_criterion, G - e is decided by the covered-graph criterion
    whenever it is connected (brute force otherwise).
    """
    edges = g.edges()
    if not edges:
        raise GraphError(f"Uniformity is undefined for the edgeless graph {g}")

    for e in edges:
        h = delete_edge(g, e)
        if use_criterion and h.is_connected():
            inner = covered_check_criterion(h)
            ok, route = inner.holds and h.edge_count > 0, 'criterion'
        else:
            inner = covered_check_bruteforce(h, node_budget=node_budget, stats=stats)
            ok, route = inner.covered, 'bruteforce'
        if not ok:
            logger.debug(f"[UNIFORM] {g} is not uniform: G - {e} is not covered ({route})")
            return UniformVerdict(False, e, inner, route)

    if strict_checks() and len(edges) >= 2:
        if not covered_check_bruteforce(g, node_budget=node_budget, stats=stats).covered:
            raise InconsistencyError(f"{g} is uniform but not covered")
    return UniformVerdict(True, route='criterion' if use_criterion else 'bruteforce')


def is_uniform_pairwise(g: Graph, *, node_budget: int | None = None,
                        stats: SearchStats | None = None) -> bool:
    """For all distinct edges e1, e2 there is a factor covering e1 and avoiding e2"""
    edges = g.edges()
    if not edges:
        raise GraphError(f"Uniformity is undefined for the edgeless graph {g}")
    if len(edges) == 1:
        # G - e is edgeless, hence not covered
        return False
    for e1 in edges:
        for e2 in edges:
            if e1 == e2:
                continue
            if find_p3_factor(g, require=e1, forbid=e2, node_budget=node_budget, stats=stats) is None:
                return False
    return True


def cross_validate(g: Graph, *, node_budget: int | None = None,
                   stats: SearchStats | None = None) -> ConsistencyReport:
    """Compare both criteria with their brute-force counterparts on one graph"""
    has_factor = find_p3_factor(g, node_budget=node_budget, stats=stats) is not None
    kaneko = kaneko_check(g)
    report = ConsistencyReport(to_graph6(g), has_factor, kaneko.holds, kaneko=kaneko)
    if report.kaneko_holds != has_factor:
        report.disagreements.append(
            f"{KANEKO} says {report.kaneko_holds}, factor search says {has_factor}")

    if g.is_connected():
        report.covered_bruteforce = covered_check_bruteforce(g, node_budget=node_budget, stats=stats).covered
        report.covered_criterion = covered_check_criterion(g).holds
        if report.covered_bruteforce != report.covered_criterion:
            report.disagreements.append(
                f"{COVERED} says {report.covered_criterion}, "
                f"brute force says {report.covered_bruteforce}")

    if report.disagreements:
        logger.error(f"[CRITERION] Inconsistency on {report.graph6}: {report.disagreements}")
    return report
