from django.test import SimpleTestCase

from factors.enumeration import Mode, enumerate_graphs
from factors.exceptions import GraphError
from factors.graphs import (VertexSet, complete, copies, cycle, disjoint_union, empty, graph_from_edges,
                            path)
from factors.oracles import brute_force_is_sun
from factors.suns import SunKind, epsilon, is_sun, sun_count

from .factories import ConnectedGraphFactory

# C3 with one pendant per vertex
NET = graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


class SunRecognitionTests(SimpleTestCase):
    """Classifying connected graphs as suns"""

    def test_trivial_suns(self):
        """Test K1 and K2 are suns"""
        self.assertEqual(is_sun(complete(1)).kind, SunKind.K1)
        self.assertEqual(is_sun(complete(2)).kind, SunKind.K2)

    def test_net_is_big_sun(self):
        """Test the net graph is a big sun with the triangle as core"""
        verdict = is_sun(NET)
        self.assertEqual(verdict.kind, SunKind.BIG_SUN)
        self.assertEqual(verdict.core.to_list(), [0, 1, 2])
        self.assertEqual(verdict.pendants, ((0, 3), (1, 4), (2, 5)))
        self.assertTrue(brute_force_is_sun(NET))

    def test_small_non_suns(self):
        """Test P3 and C4 are not suns"""
        self.assertEqual(is_sun(path(3)).kind, SunKind.NOT_SUN)
        self.assertFalse(is_sun(cycle(4)).is_sun)

    def test_even_core_is_not_a_sun(self):
        """Test C4 with a pendant at each vertex fails: the core is not factor-critical"""
        g = graph_from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)])
        self.assertFalse(is_sun(g).is_sun)

    def test_pendants_on_one_vertex(self):
        """Test two leaves on the same core vertex break the sun shape"""
        g = graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (1, 5)])
        self.assertFalse(is_sun(g).is_sun)

    def test_disconnected_input(self):
        """Test is_sun refuses disconnected graphs"""
        with self.assertRaises(GraphError):
            is_sun(empty(2))

    def test_agrees_with_definition_exhaustively(self):
        """Test the recognizer against the definition on connected graphs up to 5 vertices"""
        for n in range(1, 6):
            for g in enumerate_graphs(n, Mode.CONNECTED):
                self.assertEqual(is_sun(g).is_sun, brute_force_is_sun(g))

    def test_agrees_with_definition_on_random_graphs(self):
        """Test the recognizer against the definition on sampled connected graphs"""
        for _ in range(20):
            g = ConnectedGraphFactory(n=6)
            self.assertEqual(is_sun(g).is_sun, brute_force_is_sun(g))


class SunCountTests(SimpleTestCase):
    """Counting sun components"""

    def test_k2s_and_singletons(self):
        """Test sun(3K2 ∪ 2K1) = 5"""
        g = disjoint_union(copies(3, complete(2)), empty(2))
        count, suns = sun_count(g)
        self.assertEqual(count, 5)
        self.assertEqual([s.to_list() for s in suns], [[0, 1], [2, 3], [4, 5], [6], [7]])

    def test_isolated_vertices(self):
        """Test sun(2K1) = 2"""
        self.assertEqual(sun_count(empty(2))[0], 2)

    def test_cycle_has_no_sun(self):
        """Test sun(C4) = 0"""
        self.assertEqual(sun_count(cycle(4))[0], 0)

    def test_mixed_components(self):
        """Test only the sun components of net ∪ P3 ∪ K1 count"""
        g = disjoint_union(disjoint_union(NET, path(3)), complete(1))
        self.assertEqual(sun_count(g)[0], 2)


class EpsilonTests(SimpleTestCase):
    """The correction term of the covered-graph criterion"""

    def test_empty_set(self):
        """Test eps(∅) = 0"""
        self.assertEqual(epsilon(cycle(4), VertexSet(4)), 0)

    def test_set_spanning_an_edge(self):
        """Test eps(X) = 2 when X is not independent"""
        self.assertEqual(epsilon(cycle(5), VertexSet.of(5, [0, 1])), 2)
        self.assertEqual(epsilon(complete(4), VertexSet.of(4, [2, 3])), 2)

    def test_non_sun_component(self):
        """Test eps({v}) = 1 on C4 since C4 - v = P3"""
        self.assertEqual(epsilon(cycle(4), VertexSet.of(4, [0])), 1)

    def test_only_sun_components(self):
        """Test eps({center}) = 0 on the star K_{1,3}"""
        star = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
        self.assertEqual(epsilon(star, VertexSet.of(4, [0])), 0)
