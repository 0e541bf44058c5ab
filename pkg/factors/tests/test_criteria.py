from django.test import SimpleTestCase

from factors.criteria import (COVERED, KANEKO, covered_check_bruteforce, covered_check_criterion,
                              cross_validate, is_uniform, is_uniform_pairwise, kaneko_check)
from factors.enumeration import Mode, enumerate_graphs
from factors.exceptions import GraphError
from factors.graphs import (EdgeRef, complete, complete_bipartite, cycle, delete_edge, empty, path,
                            remark1_graph, remark2_graph)
from factors.path_factors import has_p3_factor

from .factories import ConnectedGraphFactory


class KanekoCriterionTests(SimpleTestCase):
    """sun(G-X) <= 2|X| for all X"""

    def test_single_vertex(self):
        """Test K1 fails at X = ∅"""
        verdict = kaneko_check(complete(1))
        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.witness_x.to_list(), [])
        self.assertEqual((verdict.sun_count, verdict.bound), (1, 0))

    def test_star(self):
        """Test K_{1,3} fails at its center"""
        verdict = kaneko_check(complete_bipartite(1, 3))
        self.assertEqual(verdict.criterion, KANEKO)
        self.assertEqual(verdict.witness_x.to_list(), [0])
        self.assertEqual((verdict.sun_count, verdict.bound), (3, 2))

    def test_path_holds(self):
        """Test P3 satisfies the criterion"""
        self.assertTrue(kaneko_check(path(3)).holds)

    def test_pruning_does_not_change_verdicts(self):
        """Test the size cutoff never hides a violation on graphs with 5 vertices"""
        for g in enumerate_graphs(5):
            self.assertEqual(kaneko_check(g).holds, kaneko_check(g, prune=False).holds)

    def test_matches_factor_search(self):
        """Test the criterion agrees with factor search on all graphs up to 5 vertices"""
        for n in range(1, 6):
            for g in enumerate_graphs(n):
                self.assertEqual(kaneko_check(g).holds, has_p3_factor(g))


class CoveredCriterionTests(SimpleTestCase):
    """sun(G-X) <= 2|X| - eps(X) for all X"""

    def test_path_holds(self):
        """Test P3 satisfies the covered criterion"""
        verdict = covered_check_criterion(path(3))
        self.assertEqual(verdict.criterion, COVERED)
        self.assertTrue(verdict.holds)

    def test_deleted_edge_in_degree_extremal_construction(self):
        """Test K3 ∨ 4K2 minus a K2 edge fails at the clique with 5 > 4"""
        g = delete_edge(remark1_graph(0), (3, 4))
        verdict = covered_check_criterion(g)
        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.witness_x.to_list(), [0, 1, 2])
        self.assertEqual((verdict.sun_count, verdict.bound, verdict.epsilon), (5, 4, 2))

    def test_deleted_edge_in_connectivity_extremal_construction(self):
        """Test K2 ∨ 3K2 minus a K2 edge fails at the clique with 4 > 2"""
        g = delete_edge(remark2_graph(1), (2, 3))
        verdict = covered_check_criterion(g)
        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.witness_x.to_list(), [0, 1])
        self.assertEqual((verdict.sun_count, verdict.bound), (4, 2))

    def test_disconnected_input(self):
        """Test the covered criterion needs a connected graph"""
        with self.assertRaises(GraphError):
            covered_check_criterion(empty(2))

    def test_pruning_does_not_change_verdicts(self):
        """Test the size cutoff never hides a violation on connected graphs with 5 vertices"""
        for g in enumerate_graphs(5, Mode.CONNECTED):
            self.assertEqual(covered_check_criterion(g).holds, covered_check_criterion(g, prune=False).holds)


class BruteForceCoveredTests(SimpleTestCase):
    """Every edge on some P≥3-factor"""

    def test_triangle(self):
        """Test K3 is covered"""
        self.assertTrue(covered_check_bruteforce(complete(3)).covered)

    def test_edgeless(self):
        """Test 2K1 is not covered"""
        verdict = covered_check_bruteforce(empty(2))
        self.assertFalse(verdict.covered)
        self.assertTrue(verdict.edgeless)

    def test_cycle(self):
        """Test C4 is covered"""
        self.assertTrue(covered_check_bruteforce(cycle(4)).covered)

    def test_path_is_covered(self):
        """Test K3 - e = P3 is covered by itself"""
        self.assertTrue(covered_check_bruteforce(delete_edge(complete(3), (0, 1))).covered)

    def test_uncovered_edge_reported(self):
        """Test the least edge of a graph with no factor is reported"""
        verdict = covered_check_bruteforce(complete_bipartite(1, 3))
        self.assertFalse(verdict.covered)
        self.assertEqual(verdict.uncovered_edge, EdgeRef(0, 1))

    def test_matches_criterion(self):
        """Test both coveredness routes agree on connected graphs up to 5 vertices"""
        for n in range(1, 6):
            for g in enumerate_graphs(n, Mode.CONNECTED):
                self.assertEqual(covered_check_bruteforce(g).covered, covered_check_criterion(g).holds)


class UniformityTests(SimpleTestCase):
    """G - e covered for every edge e"""

    def test_cycle_is_uniform(self):
        """Test C4 is uniform since C4 - e = P4"""
        self.assertTrue(is_uniform(cycle(4)).uniform)

    def test_single_edge(self):
        """Test K2 is not uniform"""
        verdict = is_uniform(complete(2))
        self.assertFalse(verdict.uniform)
        self.assertEqual(verdict.witness_edge, EdgeRef(0, 1))

    def test_edgeless_is_undefined(self):
        """Test uniformity of an edgeless graph is an input error"""
        with self.assertRaises(GraphError):
            is_uniform(empty(3))

    def test_degree_extremal_construction_is_not_uniform(self):
        """Test K3 ∨ 4K2 is not uniform, witnessed by a K2 edge"""
        verdict = is_uniform(remark1_graph(0))
        self.assertFalse(verdict.uniform)
        self.assertGreaterEqual(verdict.witness_edge.u, 3)
        self.assertEqual(verdict.witness_edge.v, verdict.witness_edge.u + 1)

    def test_criterion_route_agrees(self):
        """Test the criterion route gives the same verdicts on small connected graphs"""
        for g in enumerate_graphs(5, Mode.CONNECTED):
            self.assertEqual(is_uniform(g).uniform, is_uniform(g, use_criterion=True).uniform)

    def test_pairwise_formulation_agrees(self):
        """Test the edge-pair formulation agrees with the deletion formulation"""
        for n in range(2, 6):
            for g in enumerate_graphs(n, Mode.CONNECTED):
                self.assertEqual(is_uniform(g).uniform, is_uniform_pairwise(g))

    def test_uniform_implies_covered(self):
        """Test uniform graphs with two or more edges are covered"""
        for _ in range(10):
            g = ConnectedGraphFactory(n=7)
            if is_uniform(g).uniform:
                self.assertTrue(covered_check_bruteforce(g).covered)


class CrossValidationTests(SimpleTestCase):
    """Both criteria against their brute-force counterparts"""

    def test_single_vertex(self):
        """Test K1: both routes say there is no factor"""
        report = cross_validate(complete(1))
        self.assertFalse(report.has_factor)
        self.assertFalse(report.kaneko_holds)
        self.assertEqual(report.kaneko.witness_x.to_list(), [])
        self.assertTrue(report.consistent)

    def test_connected_graphs_with_six_vertices_sampled(self):
        """Test zero disagreements on sampled connected graphs"""
        for _ in range(20):
            report = cross_validate(ConnectedGraphFactory(n=6))
            self.assertTrue(report.consistent, report.disagreements)
            report.raise_if_inconsistent()
