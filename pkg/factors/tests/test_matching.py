from django.test import SimpleTestCase

from factors.enumeration import enumerate_graphs
from factors.graphs import complete, cycle, graph_from_edges, path
from factors.matching import (has_perfect_matching, is_factor_critical, is_factor_critical_within,
                              maximum_matching)
from factors.oracles import brute_force_is_factor_critical, brute_force_matching_size


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


class MaximumMatchingTests(SimpleTestCase):
    """Blossom matching sizes and validity"""

    def test_complete_graph(self):
        """Test K4 has a matching of size 2"""
        self.assertEqual(maximum_matching(complete(4)).size, 2)

    def test_odd_cycle(self):
        """Test C5 has a matching of size 2"""
        self.assertEqual(maximum_matching(cycle(5)).size, 2)

    def test_petersen(self):
        """Test the Petersen graph has a perfect matching of size 5"""
        g = petersen()
        self.assertEqual(g.edge_count, 15)
        self.assertEqual(maximum_matching(g).size, 5)
        self.assertEqual(brute_force_matching_size(g), 5)

    def test_matching_edges_are_disjoint_host_edges(self):
        """Test the returned matching validates against the graph"""
        g = petersen()
        m = maximum_matching(g)
        m.validate(g)
        self.assertTrue(m.is_perfect_on(g.full_mask))

    def test_agrees_with_exhaustive_search(self):
        """Test blossom and exhaustive matching sizes agree on all graphs with 5 vertices"""
        for g in enumerate_graphs(5):
            self.assertEqual(maximum_matching(g).size, brute_force_matching_size(g), str(g.adjacency))


class PerfectMatchingTests(SimpleTestCase):
    """Perfect matchings and factor-criticality"""

    def test_perfect_matchings(self):
        """Test K2 and C6 have one, P3 does not"""
        self.assertTrue(has_perfect_matching(complete(2)))
        self.assertFalse(has_perfect_matching(path(3)))
        self.assertTrue(has_perfect_matching(cycle(6)))

    def test_factor_critical_examples(self):
        """Test C5 and K1 are factor-critical, P3 is not"""
        self.assertTrue(is_factor_critical(cycle(5)))
        self.assertFalse(is_factor_critical(path(3)))
        self.assertTrue(is_factor_critical(complete(1)))

    def test_empty_vertex_set_is_not_factor_critical(self):
        """Test the empty set has no vertex to delete"""
        self.assertFalse(is_factor_critical_within(cycle(5), 0))

    def test_odd_cycles_are_factor_critical(self):
        """Test C3, C5, C7 and C9 are factor-critical, even cycles are not"""
        for n in (3, 5, 7, 9):
            self.assertTrue(is_factor_critical(cycle(n)), n)
        for n in (4, 6, 8):
            self.assertFalse(is_factor_critical(cycle(n)), n)

    def test_even_order_never_factor_critical(self):
        """Test no graph on 4 vertices is factor-critical"""
        for g in enumerate_graphs(4):
            self.assertFalse(is_factor_critical(g))

    def test_agrees_with_definition(self):
        """Test factor-criticality against the definition on all graphs with 5 vertices"""
        for g in enumerate_graphs(5):
            self.assertEqual(is_factor_critical(g), brute_force_is_factor_critical(g, g.full_mask))
