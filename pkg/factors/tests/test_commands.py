import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import BaseCommand, CommandError
from django.test import SimpleTestCase

from factors.exceptions import BudgetExhausted, GraphError, InconsistencyError
from factors.graphs import complete, copies, cycle, parse_edge_list, parse_graph6, remark1_graph, to_graph6
from factors.management.reporting import ReportingMixin


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


class GuardedCommand(ReportingMixin, BaseCommand):
    pass


class ExitCodeTests(SimpleTestCase):
    """Error types map onto exit codes"""

    def assertReturnCode(self, exc, code):
        def fail():
            raise exc

        with self.assertRaises(CommandError) as ctx:
            GuardedCommand().guarded(fail)
        self.assertEqual(ctx.exception.returncode, code)

    def test_mapping(self):
        """Test input errors exit 1, inconsistencies 2, budget exhaustion 3"""
        self.assertReturnCode(GraphError("bad"), 1)
        self.assertReturnCode(InconsistencyError("mismatch"), 2)
        self.assertReturnCode(BudgetExhausted(10, 11), 3)


class AnalyzeCommandTests(SimpleTestCase):
    """manage.py analyze"""

    def test_triangle(self):
        """Test the JSON report for K3"""
        report = json.loads(run('analyze', 'Bw'))
        self.assertEqual(report['schema_version'], 1)
        self.assertEqual((report['n'], report['m'], report['delta'], report['alpha']), (3, 3, 2, 1))
        self.assertTrue(report['has_p3_factor'])
        self.assertTrue(report['covered'])

    def test_malformed_graph(self):
        """Test malformed graph6 exits with code 1"""
        with self.assertRaises(CommandError) as ctx:
            run('analyze', 'B!')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_budget_exhausted(self):
        """Test a one-node budget on C4 exits with code 3"""
        with self.assertRaises(CommandError) as ctx:
            run('analyze', to_graph6(cycle(4)), '--node-budget', '1')
        self.assertEqual(ctx.exception.returncode, 3)


class CheckCommandTests(SimpleTestCase):
    """manage.py check"""

    def test_degree_condition(self):
        """Test thm13 on K5 is satisfied"""
        report = json.loads(run('check', 'thm13', 'D~{'))
        self.assertEqual(report['theorem'], 'thm13')
        self.assertTrue(report['satisfied'])

    def test_neighborhood_condition(self):
        """Test thm14 on the connectivity construction fails"""
        g6 = run('gen', 'remark2', '1').strip()
        report = json.loads(run('check', 'thm14', g6, '--k', '1', '--gamma', '1/3'))
        self.assertFalse(report['satisfied'])

    def test_neighborhood_condition_needs_parameters(self):
        """Test thm14 without --k and --gamma exits with code 1"""
        with self.assertRaises(CommandError) as ctx:
            run('check', 'thm14', 'D~{')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_long_graph6_literal(self):
        """Test a graph6 argument longer than a file name still gets a verdict"""
        report = json.loads(run('check', 'thm13', to_graph6(complete(60))))
        self.assertTrue(report['satisfied'])
        self.assertEqual(report['parameters']['n'], 60)

    def test_system_check_still_runs(self):
        """Test plain check is Django's system check"""
        self.assertIn('no issues', run('check'))


class ValidateCommandTests(SimpleTestCase):
    """manage.py validate"""

    def test_factor_criterion(self):
        """Test thm11 up to 4 vertices passes"""
        report = json.loads(run('validate', 'thm11', '--nmax', '4'))
        self.assertTrue(report['passed'])
        self.assertEqual(report['graphs_examined'], 1 + 2 + 8 + 64)
        self.assertEqual(report['parameters']['nmax'], 4)

    def test_budget_exhaustion_exits_3(self):
        """Test the report is printed and the exit code is 3 when graphs ran out of budget"""
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('validate', 'thm11', '--nmax', '4', '--node-budget', '1', stdout=out, stderr=StringIO())
        self.assertEqual(ctx.exception.returncode, 3)
        report = json.loads(out.getvalue())
        self.assertIn(to_graph6(cycle(4)), report['budget_exhausted'])

    def test_replay(self):
        """Test --replay re-examines one graph"""
        report = json.loads(run('validate', 'thm13', '--replay', 'D~{'))
        self.assertEqual(report['graph6'], 'D~{')
        self.assertTrue(report['hypothesis_hit'])
        self.assertIsNone(report['counterexample'])

    def test_bad_orders(self):
        """Test a malformed --orders list exits with code 1"""
        with self.assertRaises(CommandError) as ctx:
            run('validate', 'thm12', '--random', '3', '--orders', '7,x')
        self.assertEqual(ctx.exception.returncode, 1)


class DemoCommandTests(SimpleTestCase):
    """manage.py demo"""

    def test_degree_construction(self):
        """Test remark1 at t = 1 in witness-only mode"""
        report = json.loads(run('demo', 'remark1', '--t', '1', '--witness-only'))
        self.assertEqual(report['mode'], 'witness-only')
        self.assertEqual(report['witness_x'], [0, 1, 2, 3])
        self.assertEqual((report['sun_count'], report['bound']), (7, 6))

    def test_connectivity_construction(self):
        """Test remark2 at k = 1 is fully checked"""
        report = json.loads(run('demo', 'remark2', '--k', '1'))
        self.assertEqual(report['mode'], 'full')
        self.assertFalse(report['uniform'])
        self.assertEqual(report['verdict'], 'not covered => not uniform')


class GenCommandTests(SimpleTestCase):
    """manage.py gen"""

    def test_construction_graph6(self):
        """Test gen remark1 0 prints K3 ∨ 4K2"""
        self.assertEqual(parse_graph6(run('gen', 'remark1', '0').strip()), remark1_graph(0))

    def test_family_edge_list(self):
        """Test gen family cycle 5 --edge-list"""
        self.assertEqual(parse_edge_list(run('gen', 'family', 'cycle', '5', '--edge-list')), cycle(5))

    def test_unknown_family(self):
        """Test unknown families exit with code 1"""
        with self.assertRaises(CommandError) as ctx:
            run('gen', 'family', 'petersen')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_copies_of_a_base_family(self):
        """Test gen family copies 4 complete 2 prints 4K2"""
        self.assertEqual(parse_graph6(run('gen', 'family', 'copies', '4', 'complete', '2').strip()),
                         copies(4, complete(2)))

    def test_copies_needs_a_base_family(self):
        """Test copies without a base family exits with code 1"""
        with self.assertRaises(CommandError) as ctx:
            run('gen', 'family', 'copies', '4')
        self.assertEqual(ctx.exception.returncode, 1)
