"""
Business logic layer for the path-factor toolkit.
Handles the orchestration behind the CLI and the API: single-graph analysis,
hypothesis checks, theorem validation runs and the sharpness demos.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .conf import path_factor_setting, search_node_budget
from .criteria import (COVERED, KANEKO, covered_check_bruteforce, covered_check_criterion,
                       cross_validate, is_uniform, kaneko_check)
from .enumeration import Mode, enumerate_graphs
from .exceptions import BudgetExhausted, GraphError, InconsistencyError
from .graphs import (EdgeRef, Graph, VertexSet, complete, delete_edge, parse_graph6, remark1_graph,
                     remark2_graph, to_graph6)
from .matching import is_factor_critical, maximum_matching
from .oracles import brute_force_is_sun, brute_force_matching_size
from .parameters import (HypothesisReport, Thm14Params, check_thm13_hypothesis,
                         check_thm14_hypothesis, component_count, degree_condition_excluded,
                         edge_connectivity_at_least, independence_number, isolated_count, min_degree,
                         neighborhood, vertex_connectivity)
from .path_factors import SearchStats, find_p3_factor
from .suns import count_suns_within, epsilon, is_sun, sun_count

logger = logging.getLogger(__name__)

THEOREMS = ('thm11', 'thm12', 'thm13', 'thm14')
ORACLE_TARGETS = ('suns', 'matching', 'normal_form')
CONSTRUCTIONS = ('remark1', 'remark2')
VALIDATION_TARGETS = THEOREMS + ORACLE_TARGETS

# Targets whose statements only speak about connected graphs
CONNECTED_TARGETS = ('thm12', 'suns')


def _budget(node_budget):
    return search_node_budget() if node_budget is None else (node_budget or None)


# ===== Analysis =====

@dataclass
class GraphAnalysis:
    graph6: str
    n: int
    m: int
    delta: int
    alpha: int
    kappa: int | None
    two_edge_connected: bool
    isolated_vertices: int
    components: int
    sun_components: int
    has_p3_factor: bool
    covered: bool
    uniform: bool
    witnesses: dict = field(default_factory=dict)
    search_nodes: int = 0


class AnalysisService:
    """Every verdict the toolkit can compute for one graph"""

    @staticmethod
    def analyze(g: Graph, node_budget: int | None = None) -> GraphAnalysis:
        budget = _budget(node_budget)
        stats = SearchStats()
        alpha, independent = independence_number(g)
        suns, sun_sets = sun_count(g)

        factor = find_p3_factor(g, node_budget=budget, stats=stats)
        covered = covered_check_bruteforce(g, node_budget=budget, stats=stats)
        witnesses = {
            'p3_factor': [list(p) for p in factor.paths] if factor else None,
            'maximum_independent_set': independent.to_list(),
            'sun_components': [s.to_list() for s in sun_sets],
            'uncovered_edge': list(covered.uncovered_edge) if covered.uncovered_edge else None,
        }

        if g.edge_count:
            uniform = is_uniform(g, node_budget=budget, stats=stats)
            uniform_ok = uniform.uniform
            witnesses['non_uniform_edge'] = list(uniform.witness_edge) if uniform.witness_edge else None
        else:
            uniform_ok = False
            witnesses['non_uniform_edge'] = None
            witnesses['edgeless'] = True

        if g.n <= int(path_factor_setting('FULL_CHECK_MAX_ORDER')):
            consistency = cross_validate(g, node_budget=budget, stats=stats)
            consistency.raise_if_inconsistent()
            kaneko = consistency.kaneko
            witnesses['kaneko_violation'] = kaneko.witness_x.to_list() if kaneko.witness_x is not None else None

        analysis = GraphAnalysis(
            graph6=to_graph6(g),
            n=g.n,
            m=g.edge_count,
            delta=min_degree(g),
            alpha=alpha,
            kappa=vertex_connectivity(g) if g.n >= 2 else None,
            two_edge_connected=edge_connectivity_at_least(g, 2),
            isolated_vertices=isolated_count(g),
            components=component_count(g),
            sun_components=suns,
            has_p3_factor=factor is not None,
            covered=covered.covered,
            uniform=uniform_ok,
            witnesses=witnesses,
            search_nodes=stats.nodes,
        )
        logger.info(f"[ANALYZE] {analysis.graph6}: factor={analysis.has_p3_factor} "
                    f"covered={analysis.covered} uniform={analysis.uniform}")
        return analysis


class HypothesisService:
    """Dispatch to the hypothesis evaluators by theorem name"""

    @staticmethod
    def check(theorem: str, g: Graph, params: Thm14Params | None = None) -> HypothesisReport:
        if theorem == 'thm13':
            return check_thm13_hypothesis(g)
        if theorem == 'thm14':
            if params is None:
                raise GraphError("thm14 needs k and gamma")
            return check_thm14_hypothesis(g, params)
        raise GraphError(f"Unknown theorem {theorem!r}; expected thm13 or thm14")


# ===== Validation =====

@dataclass
class ValidationScope:
    """Exhaustive orders nmin..nmax (none when nmax is 0) plus random samples"""
    nmin: int = 1
    nmax: int = 0
    random_count: int = 0
    random_orders: tuple[int, ...] = ()
    seed: int = 0
    edge_prob: Fraction = Fraction(1, 2)
    node_budget: int | None = None

    def describe(self) -> dict:
        return {
            'nmin': self.nmin,
            'nmax': self.nmax,
            'random_count': self.random_count,
            'random_orders': list(self.random_orders),
            'seed': self.seed,
            'edge_prob': str(self.edge_prob),
        }


@dataclass
class ValidationReport:
    theorem: str
    parameters: dict = field(default_factory=dict)
    graphs_examined: int = 0
    hypothesis_hits: int = 0
    counterexamples: list[str] = field(default_factory=list)
    disagreements: list[dict] = field(default_factory=list)
    budget_exhausted: list[str] = field(default_factory=list)
    search_nodes: int = 0
    searches: int = 0
    wall_time_seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.disagreements

    def finalize(self):
        """Order-independent aggregation"""
        self.counterexamples = sorted(set(self.counterexamples))
        self.disagreements = sorted(self.disagreements, key=lambda d: (d['graph6'], d['detail']))
        self.budget_exhausted = sorted(set(self.budget_exhausted))


@dataclass(frozen=True)
class Outcome:
    """Result of examining one graph"""
    hit: bool
    counterexample: str | None = None
    disagreement: str | None = None


class ValidationService:
    """Exhaustive and sampled validation of the criteria and sufficient conditions"""

    @staticmethod
    def min_degree_for(target: str, params: Thm14Params | None) -> int:
        """
        A degree floor every hypothesis hit on a non-complete graph must clear:
        there α >= 2, so 2δ > α + 4 forces δ >= 4; (k+2)-connectivity forces
        δ >= k+2. Complete graphs below the thm13 floor are added separately.
        """
        if target == 'thm13':
            return 4
        if target == 'thm14':
            return params.k + 2
        return 0

    @staticmethod
    def graphs_in_scope(target: str, scope: ValidationScope,
                        params: Thm14Params | None = None) -> Iterator[Graph]:
        connected = target in CONNECTED_TARGETS
        floor = ValidationService.min_degree_for(target, params)
        for n in range(max(scope.nmin, 1), scope.nmax + 1):
            # K_n has α = 1 and meets 2δ > 5 from n = 4; only K4 sits below the floor
            if target == 'thm13' and 4 <= n <= floor:
                yield complete(n)
            mode = Mode.CONNECTED if connected else Mode.ALL
            yield from enumerate_graphs(n, mode, min_degree=floor)
        for n in scope.random_orders:
            mode = Mode.RANDOM_CONNECTED if connected else Mode.RANDOM
            yield from enumerate_graphs(n, mode, count=scope.random_count,
                                        edge_prob=scope.edge_prob, seed=scope.seed + n)

    @staticmethod
    def examine(target: str, g: Graph, params: Thm14Params | None,
                node_budget: int | None, stats: SearchStats) -> Outcome:
        if target == 'thm11':
            has_factor = find_p3_factor(g, node_budget=node_budget, stats=stats) is not None
            holds = kaneko_check(g).holds
            if has_factor != holds:
                return Outcome(True, disagreement=f"{KANEKO} says {holds}, factor search says {has_factor}")
            return Outcome(True)

        if target == 'thm12':
            brute = covered_check_bruteforce(g, node_budget=node_budget, stats=stats).covered
            holds = covered_check_criterion(g).holds
            if brute != holds:
                return Outcome(True, disagreement=f"{COVERED} says {holds}, brute force says {brute}")
            return Outcome(True)

        if target == 'thm13' and degree_condition_excluded(g):
            return Outcome(False)
        if target in ('thm13', 'thm14'):
            hypothesis = HypothesisService.check(target, g, params)
            if not hypothesis.satisfied:
                return Outcome(False)
            verdict = is_uniform(g, node_budget=node_budget, stats=stats)
            if not verdict.uniform:
                return Outcome(True, counterexample=f"G - {verdict.witness_edge} is not covered")
            return Outcome(True)

        if target == 'suns':
            fast = is_sun(g).is_sun
            slow = brute_force_is_sun(g)
            if fast != slow:
                return Outcome(True, disagreement=f"recognizer says {fast}, definition says {slow}")
            return Outcome(True)

        if target == 'matching':
            fast = maximum_matching(g).size
            slow = brute_force_matching_size(g)
            if fast != slow:
                return Outcome(True, disagreement=f"blossom matching {fast}, exhaustive {slow}")
            if g.n % 2 == 0 and is_factor_critical(g):
                return Outcome(True, disagreement="even-order graph reported factor-critical")
            return Outcome(True)

        if target == 'normal_form':
            restricted = find_p3_factor(g, node_budget=node_budget, stats=stats) is not None
            unrestricted = find_p3_factor(g, max_path_order=None, node_budget=node_budget,
                                          stats=stats) is not None
            if restricted != unrestricted:
                return Outcome(True, disagreement=f"3..5-vertex paths say {restricted}, "
                                                  f"unrestricted search says {unrestricted}")
            return Outcome(True)

        raise GraphError(f"Unknown validation target {target!r}; expected one of {VALIDATION_TARGETS}")

    @staticmethod
    def validate(target: str, scope: ValidationScope,
                 params: Thm14Params | None = None) -> ValidationReport:
        """
        Run `target` over every graph in scope. Budget exhaustion and internal
        inconsistencies are recorded per graph and the run continues.
        """
        if target not in VALIDATION_TARGETS:
            raise GraphError(f"Unknown validation target {target!r}; expected one of {VALIDATION_TARGETS}")
        if target == 'thm14' and params is None:
            raise GraphError("thm14 validation needs k and gamma")

        budget = _budget(scope.node_budget)
        progress_every = int(path_factor_setting('PROGRESS_EVERY'))
        report = ValidationReport(theorem=target, parameters=scope.describe())
        if params is not None:
            report.parameters.update({'k': params.k, 'gamma': str(params.gamma), 'b': params.b})
        stats = SearchStats()
        started = time.perf_counter()

        logger.info(f"[VALIDATE] Starting {target} over {scope.describe()}")
        for g in ValidationService.graphs_in_scope(target, scope, params):
            report.graphs_examined += 1
            try:
                outcome = ValidationService.examine(target, g, params, budget, stats)
            except BudgetExhausted as exc:
                report.budget_exhausted.append(to_graph6(g))
                logger.warning(f"[VALIDATE] {to_graph6(g)}: {exc}")
                continue
            except InconsistencyError as exc:
                outcome = Outcome(True, disagreement=str(exc))

            report.hypothesis_hits += outcome.hit
            if outcome.counterexample:
                report.counterexamples.append(to_graph6(g))
                logger.error(f"[VALIDATE] Counterexample to {target}: {to_graph6(g)} ({outcome.counterexample})")
            if outcome.disagreement:
                report.disagreements.append({'graph6': to_graph6(g), 'detail': outcome.disagreement})
                logger.error(f"[VALIDATE] Disagreement on {to_graph6(g)}: {outcome.disagreement}")
            if progress_every and report.graphs_examined % progress_every == 0:
                logger.info(f"[VALIDATE] {target}: {report.graphs_examined} graphs, "
                            f"{report.hypothesis_hits} hits")

        report.search_nodes = stats.nodes
        report.searches = stats.searches
        report.wall_time_seconds = round(time.perf_counter() - started, 3)
        if target in ('thm13', 'thm14') and report.hypothesis_hits == 0:
            report.notes.append("no hypothesis hits in scope")
        report.finalize()

        logger.info(f"[VALIDATE] {target} done: {report.graphs_examined} graphs, "
                    f"{report.hypothesis_hits} hits, {len(report.counterexamples)} counterexamples, "
                    f"{len(report.disagreements)} disagreements in {report.wall_time_seconds}s")
        return report

    @staticmethod
    def replay(target: str, graph6: str, params: Thm14Params | None = None,
               node_budget: int | None = None) -> Outcome:
        """Re-examine one graph listed in a report"""
        g = parse_graph6(graph6)
        return ValidationService.examine(target, g, params, _budget(node_budget), SearchStats())


# ===== Sharpness demos =====

@dataclass(frozen=True)
class Identity:
    name: str
    expected: object
    actual: object

    @property
    def holds(self) -> bool:
        return self.expected == self.actual


@dataclass
class SharpnessReport:
    construction: str
    parameters: dict
    graph6: str
    n: int
    m: int
    deleted_edge: EdgeRef
    witness_x: VertexSet
    sun_count: int
    epsilon: int
    bound: int
    hypothesis: HypothesisReport
    identities: list[Identity]
    mode: str
    criterion_holds_after_deletion: bool | None = None
    uniform: bool | None = None
    non_uniform_edge: EdgeRef | None = None
    verdict: str = "not covered => not uniform"


class SharpnessService:
    """Reproduce the two constructions showing the conditions are tight"""

    @staticmethod
    def _full_check(n: int, full_check: bool | None) -> bool:
        if full_check is None:
            return n <= int(path_factor_setting('FULL_CHECK_MAX_ORDER'))
        return full_check

    @staticmethod
    def _deletion_witness(g: Graph, e: EdgeRef, clique_size: int):
        h = delete_edge(g, e)
        x = VertexSet.of(g.n, range(clique_size))
        suns = count_suns_within(h, h.full_mask & ~x.mask)
        eps = epsilon(h, x)
        return h, x, suns, eps, 2 * len(x) - eps

    @staticmethod
    def _finish(report: SharpnessReport, g: Graph, h: Graph, full: bool,
                node_budget: int | None) -> SharpnessReport:
        if full:
            report.criterion_holds_after_deletion = covered_check_criterion(h).holds
            verdict = is_uniform(g, node_budget=_budget(node_budget))
            report.uniform = verdict.uniform
            report.non_uniform_edge = verdict.witness_edge
            report.identities += [
                Identity('criterion_holds_after_deletion', False, report.criterion_holds_after_deletion),
                Identity('uniform', False, report.uniform),
            ]

        failed = [i for i in report.identities if not i.holds]
        if failed:
            detail = ", ".join(f"{i.name}: expected {i.expected}, got {i.actual}" for i in failed)
            raise InconsistencyError(f"{report.construction} {report.parameters}: {detail}")
        logger.info(f"[DEMO] {report.construction} {report.parameters}: sun(G'-X)={report.sun_count} "
                    f"> {report.bound} = 2|X|-eps ({report.mode})")
        return report

    @staticmethod
    def remark1(t: int, full_check: bool | None = None,
                node_budget: int | None = None) -> SharpnessReport:
        """K_{3+t} ∨ (4+2t)K2 sits at δ = (α+4)/2 and is not uniform"""
        g = remark1_graph(t)
        delta = min_degree(g)
        alpha, _ = independence_number(g)
        kappa = vertex_connectivity(g)
        e = EdgeRef(3 + t, 4 + t)
        h, x, suns, eps, bound = SharpnessService._deletion_witness(g, e, 3 + t)
        hypothesis = check_thm13_hypothesis(g)
        full = SharpnessService._full_check(g.n, full_check)

        identities = [
            Identity('n', 11 + 4 * t, g.n),
            Identity('min_degree', 4 + t, delta),
            Identity('independence_number', 4 + 2 * t, alpha),
            Identity('twice_min_degree_equals_alpha_plus_4', alpha + 4, 2 * delta),
            Identity('vertex_connectivity', 3 + t, kappa),
            Identity('thm13_hypothesis_satisfied', False, hypothesis.satisfied),
            Identity('epsilon', 2, eps),
            Identity('sun_count', 5 + 2 * t, suns),
            Identity('bound', 4 + 2 * t, bound),
            Identity('sun_count_exceeds_bound', True, suns > bound),
        ]
        report = SharpnessReport(
            construction='remark1',
            parameters={'t': t, 'delta': delta, 'alpha': alpha, 'kappa': kappa},
            graph6=to_graph6(g), n=g.n, m=g.edge_count,
            deleted_edge=e, witness_x=x, sun_count=suns, epsilon=eps, bound=bound,
            hypothesis=hypothesis, identities=identities,
            mode='full' if full else 'witness-only',
        )
        return SharpnessService._finish(report, g, h, full, node_budget)

    @staticmethod
    def default_b(k: int) -> int:
        """Smallest b with b/(2k+1) >= 1/3"""
        return (2 * k + 3) // 3

    @staticmethod
    def remark2(k: int, b: int | None = None, full_check: bool | None = None,
                node_budget: int | None = None) -> SharpnessReport:
        """K_{k+1} ∨ (2k+1)K2 is only (k+1)-connected, meets the neighborhood bound with equality, and is not uniform"""
        g = remark2_graph(k)
        b = SharpnessService.default_b(k) if b is None else b
        if not 1 <= b <= 2 * k + 1:
            raise GraphError(f"b must lie in 1..{2 * k + 1}, got {b}")
        params = Thm14Params(k, Fraction(b, 2 * k + 1))
        gamma = params.gamma
        kappa = vertex_connectivity(g)

        # one vertex from each of the first b K2 blocks
        a = VertexSet.of(g.n, [k + 1 + 2 * i for i in range(b)])
        neighbors = len(neighborhood(g, a))
        hypothesis = check_thm14_hypothesis(g, params)
        e = EdgeRef(k + 1, k + 2)
        h, x, suns, eps, bound = SharpnessService._deletion_witness(g, e, k + 1)
        full = SharpnessService._full_check(g.n, full_check)

        identities = [
            Identity('n', 5 * k + 3, g.n),
            Identity('vertex_connectivity', k + 1, kappa),
            Identity('floor_gamma_times_2k_plus_1', b, params.b),
            Identity('canonical_set_independent', True, g.is_independent(a.mask)),
            Identity('neighborhood_size', gamma * (2 * k + 1) + k + 1, neighbors),
            Identity('neighborhood_equals_gamma_form', gamma * (g.n - 3 * k - 2) + k + 1, neighbors),
            Identity('neighborhood_below_threshold', True, neighbors < params.neighborhood_threshold(g.n)),
            Identity('order_exceeds_bound', True, g.n > params.order_bound),
            Identity('thm14_hypothesis_satisfied', False, hypothesis.satisfied),
            Identity('epsilon', 2, eps),
            Identity('sun_count', 2 * k + 2, suns),
            Identity('bound', 2 * k, bound),
            Identity('sun_count_exceeds_bound', True, suns > bound),
        ]
        report = SharpnessReport(
            construction='remark2',
            parameters={'k': k, 'b': b, 'gamma': str(gamma), 'kappa': kappa,
                        'canonical_independent_set': a.to_list(), 'neighborhood_size': neighbors},
            graph6=to_graph6(g), n=g.n, m=g.edge_count,
            deleted_edge=e, witness_x=x, sun_count=suns, epsilon=eps, bound=bound,
            hypothesis=hypothesis, identities=identities,
            mode='full' if full else 'witness-only',
        )
        return SharpnessService._finish(report, g, h, full, node_budget)

    @staticmethod
    def sharpness_demo(construction: str, *, t: int = 0, k: int = 1, b: int | None = None,
                       full_check: bool | None = None, node_budget: int | None = None) -> SharpnessReport:
        if construction == 'remark1':
            return SharpnessService.remark1(t, full_check=full_check, node_budget=node_budget)
        if construction == 'remark2':
            return SharpnessService.remark2(k, b=b, full_check=full_check, node_budget=node_budget)
        raise GraphError(f"Unknown construction {construction!r}; expected one of {list(CONSTRUCTIONS)}")
