from django.test import SimpleTestCase
from rest_framework import status
from rest_framework.test import APIClient

from factors.graphs import complete, remark2_graph, to_edge_list, to_graph6


class AnalyzeViewTests(SimpleTestCase):
    """POST /api/analyze/"""

    def setUp(self):
        self.client = APIClient()

    def test_graph6(self):
        """Test a graph6 body returns the full report"""
        response = self.client.post('/api/analyze/', {'graph': 'Bw'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['schema_version'], 1)
        self.assertEqual(response.data['n'], 3)
        self.assertTrue(response.data['has_p3_factor'])

    def test_edge_list(self):
        """Test an edge list body is accepted"""
        body = {'graph': "4 3\n0 1\n1 2\n2 3\n", 'format': 'edge_list'}
        response = self.client.post('/api/analyze/', body, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['m'], 3)

    def test_malformed_graph(self):
        """Test malformed graph6 returns 400"""
        response = self.client.post('/api/analyze/', {'graph': 'B!'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)


class CheckViewTests(SimpleTestCase):
    """POST /api/check/"""

    def setUp(self):
        self.client = APIClient()

    def test_neighborhood_condition(self):
        """Test thm14 with exact γ on the connectivity construction"""
        body = {'theorem': 'thm14', 'graph': to_graph6(remark2_graph(1)), 'k': 1, 'gamma': '1/3'}
        response = self.client.post('/api/check/', body, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertFalse(response.data['satisfied'])

    def test_degree_condition_from_edge_list(self):
        """Test thm13 on K5 given as an edge list"""
        body = {'theorem': 'thm13', 'graph': to_edge_list(complete(5)), 'format': 'edge_list'}
        response = self.client.post('/api/check/', body, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.data['satisfied'])

    def test_missing_parameters(self):
        """Test thm14 without k and gamma returns 400"""
        body = {'theorem': 'thm14', 'graph': 'D~{'}
        response = self.client.post('/api/check/', body, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)


class DemoViewTests(SimpleTestCase):
    """GET /api/demo/<construction>/"""

    def setUp(self):
        self.client = APIClient()

    def test_degree_construction(self):
        """Test remark1 at t = 1 without the full check"""
        response = self.client.get('/api/demo/remark1/', {'t': 1, 'full': 'false'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['mode'], 'witness-only')
        self.assertEqual(response.data['sun_count'], 7)

    def test_connectivity_construction(self):
        """Test remark2 at k = 1"""
        response = self.client.get('/api/demo/remark2/', {'k': 1})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertFalse(response.data['uniform'])

    def test_unknown_construction(self):
        """Test unknown constructions return 404"""
        response = self.client.get('/api/demo/remark3/')
        self.assertEqual(response.status_code, status.HTTP_404_NOT_FOUND)

    def test_bad_parameter(self):
        """Test a non-integer t returns 400"""
        response = self.client.get('/api/demo/remark1/', {'t': 'x'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
