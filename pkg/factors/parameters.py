"""
Exact graph parameters and the hypothesis evaluators of the two sufficient
conditions for P≥3-factor uniformity:

  thm13: G is 2-edge-connected and 2·δ(G) > α(G) + 4
  thm14: G is (k+2)-connected, n >= 5k+3 - 3/(5γ-1), and
         |N(A)| > γ(n-3k-2) + k + 2 for every independent A with |A| = ⌊γ(2k+1)⌋

All thm14 comparisons are done on integers after clearing the
denominator of γ.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import networkx as nx

from .conf import strict_checks
from .exceptions import GraphError, InconsistencyError
from .graphs import Graph, VertexSet, bit, iter_bits

logger = logging.getLogger(__name__)

GAMMA_MIN = Fraction(1, 3)
GAMMA_MAX = Fraction(1)


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    return max(g.degrees())


def isolated_count(g: Graph) -> int:
    """i(G)"""
    return sum(1 for d in g.degrees() if d == 0)


def component_count(g: Graph) -> int:
    """ω(G)"""
    return len(g.component_masks())


def independence_number(g: Graph) -> tuple[int, VertexSet]:
    """
    α(G) with a maximum independent set as witness.

    Computed as a maximum clique of the complement (branch and bound with a
    colouring bound).
    """
    complement = nx.complement(g.to_networkx())
    clique, size = nx.max_weight_clique(complement, weight=None)
    witness = VertexSet.of(g.n, clique)
    if strict_checks():
        if not g.is_independent(witness.mask) or len(witness) != size:
            raise InconsistencyError(f"Independence witness {witness} is not independent in {g}")
        for v in iter_bits(g.full_mask & ~witness.mask):
            if g.is_independent(witness.mask | bit(v)):
                raise InconsistencyError(f"Independence witness {witness} extends by {v}")
    return size, witness


def neighborhood(g: Graph, a: VertexSet) -> VertexSet:
    """N_G(A), the union of the neighbor sets of A"""
    if a.n != g.n:
        raise GraphError(f"Vertex set over {a.n} vertices used with a graph on {g.n}")
    mask = 0
    for v in a:
        mask |= g.adjacency[v]
    return VertexSet(g.n, mask)


def edge_connectivity_at_least(g: Graph, k: int) -> bool:
    """
    g is connected and no set of fewer than k edges disconnects it.
    A single vertex has edge connectivity 0.
    """
    if k < 1:
        raise GraphError(f"Edge connectivity level must be at least 1, got {k}")
    if g.n < 2 or not g.is_connected():
        return False
    G = g.to_networkx()
    if k == 2:
        return not nx.has_bridges(G)
    return nx.edge_connectivity(G) >= k


def vertex_connectivity(g: Graph) -> int:
    """κ(G) via Menger's theorem on unit-capacity flows; κ(K_n) = n - 1"""
    if g.n < 2:
        raise GraphError(f"Vertex connectivity needs at least 2 vertices, got {g.n}")
    return nx.node_connectivity(g.to_networkx())


def enumerate_independent_sets(g: Graph, size: int) -> Iterator[VertexSet]:
    """All independent sets of exactly `size` vertices, in ascending lexicographic order"""
    if not 0 <= size <= g.n:
        raise GraphError(f"Independent set size {size} outside 0..{g.n}")
    check = strict_checks()

    def extend(start: int, chosen: int, blocked: int, remaining: int):
        if remaining == 0:
            if check and chosen & neighborhood(g, VertexSet(g.n, chosen)).mask:
                raise InconsistencyError(f"Enumerated set {chosen:#x} meets its own neighborhood")
            yield VertexSet(g.n, chosen)
            return
        for v in range(start, g.n - remaining + 1):
            if blocked >> v & 1:
                continue
            yield from extend(v + 1, chosen | bit(v), blocked | g.adjacency[v], remaining - 1)

    return extend(0, 0, 0, size)


def parse_rational(text) -> Fraction:
    """Parse 'p/q' (or an integer / decimal literal) exactly"""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphError(f"Not an exact rational: {text!r}") from exc


@dataclass(frozen=True)
class Thm14Params:
    k: int
    gamma: Fraction

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise GraphError(f"k must be a positive integer, got {self.k!r}")
        gamma = self.gamma if isinstance(self.gamma, Fraction) else parse_rational(self.gamma)
        if not GAMMA_MIN <= gamma <= GAMMA_MAX:
            raise GraphError(f"gamma must lie in [1/3, 1], got {gamma}")
        object.__setattr__(self, 'gamma', gamma)

    @property
    def b(self) -> int:
        """⌊γ(2k+1)⌋"""
        return self.gamma.numerator * (2 * self.k + 1) // self.gamma.denominator

    @property
    def order_bound(self) -> Fraction:
        """5k + 3 - 3/(5γ - 1)"""
        return 5 * self.k + 3 - Fraction(3) / (5 * self.gamma - 1)

    def neighborhood_threshold(self, n: int) -> Fraction:
        """γ(n - 3k - 2) + k + 2; |N(A)| must exceed it"""
        return self.gamma * (n - 3 * self.k - 2) + self.k + 2


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    required: object
    actual: object
    passed: bool


@dataclass
class HypothesisReport:
    theorem: str
    satisfied: bool
    checks: list[HypothesisCheck]
    witness: VertexSet | None = None
    parameters: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def check(self, name: str) -> HypothesisCheck:
        return next(c for c in self.checks if c.name == name)


def degree_condition_excluded(g: Graph) -> bool:
    """
    True when 2·δ > α + 4 cannot hold, decided without computing α:
    δ <= 2 (α >= 1), or some independent set has 2δ - 4 vertices.
    """
    size = 2 * min_degree(g) - 4
    if size <= 0:
        return True
    if size > g.n:
        return False
    return next(enumerate_independent_sets(g, size), None) is not None


def check_thm13_hypothesis(g: Graph) -> HypothesisReport:
    """2-edge-connected and 2·δ > α + 4 (integer form of δ > (α+4)/2)"""
    delta = min_degree(g)
    two_edge_connected = edge_connectivity_at_least(g, 2)
    alpha, independent = independence_number(g)
    degree_ok = 2 * delta > alpha + 4

    checks = [
        HypothesisCheck('two_edge_connected', True, two_edge_connected, two_edge_connected),
        # required is an exclusive lower bound on 2·δ
        HypothesisCheck('twice_min_degree_exceeds_alpha_plus_4', alpha + 4, 2 * delta, degree_ok),
    ]
    report = HypothesisReport(
        theorem='thm13',
        satisfied=two_edge_connected and degree_ok,
        checks=checks,
        witness=None if degree_ok else independent,
        parameters={'n': g.n, 'delta': delta, 'alpha': alpha},
    )
    logger.debug(f"[HYPOTHESIS] thm13 on {g}: satisfied={report.satisfied}")
    return report


def check_thm14_hypothesis(g: Graph, p: Thm14Params) -> HypothesisReport:
    """
    Evaluate all three conditions (each is reported even when an earlier one
    fails). With γ = num/den every comparison is multiplied through by den.
    """
    n, k, b = g.n, p.k, p.b
    num, den = p.gamma.numerator, p.gamma.denominator

    kappa = vertex_connectivity(g) if n >= 2 else 0
    connectivity_ok = kappa >= k + 2

    # n >= 5k+3 - 3/(5γ-1), times den·(5γ-1) = 5·num - den > 0
    slope = 5 * num - den
    order_ok = n * slope >= (5 * k + 3) * slope - 3 * den

    # |N(A)| > γ(n-3k-2) + k + 2, times den
    rhs = num * (n - 3 * k - 2) + den * (k + 2)
    notes = []
    witness = None
    smallest = None
    examined = 0
    if b <= n:
        for a in enumerate_independent_sets(g, b):
            examined += 1
            size = len(neighborhood(g, a))
            if smallest is None or size < smallest:
                smallest = size
            if witness is None and den * size <= rhs:
                witness = a
    if examined == 0:
        notes.append(f"no independent set of size b={b}; neighborhood condition holds vacuously")
    neighborhood_ok = witness is None

    checks = [
        HypothesisCheck('vertex_connectivity', k + 2, kappa, connectivity_ok),
        HypothesisCheck('order', p.order_bound, n, order_ok),
        # required is exclusive; actual is the least |N(A)| seen
        HypothesisCheck('neighborhood', p.neighborhood_threshold(n), smallest, neighborhood_ok),
    ]
    report = HypothesisReport(
        theorem='thm14',
        satisfied=connectivity_ok and order_ok and neighborhood_ok,
        checks=checks,
        witness=witness,
        parameters={'n': n, 'k': k, 'gamma': p.gamma, 'b': b, 'kappa': kappa,
                    'independent_sets_checked': examined},
        notes=notes,
    )
    logger.debug(f"[HYPOTHESIS] thm14(k={k}, gamma={p.gamma}) on {g}: satisfied={report.satisfied}")
    return report
