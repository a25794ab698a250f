from pathlib import Path
from tempfile import TemporaryDirectory

from click.testing import CliRunner
from django.test import SimpleTestCase
from pydantic import ValidationError

from forge import REPORT_HEADER

from decomp.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, run, select_algorithm
from decomp.decompose import fda_alpha
from decomp.management.commands.decomp import command
from decomp.relation import DONT_CARE
from decomp.textformat import serialize
from decomp.types import Algorithm, RunConfig

from .tables import (FIXTURES, boolean_table, fixture_text, partial_table, shared_table,
                     two_bridge_table, xnor_table)


def decompose(text, *bound, **options):
    return run(RunConfig(command='decompose', bound=[list(b) for b in bound], **options), text)


def bad_h_table(d):
    h = d.table_h
    tid = h.tids[0]
    return h.with_values('f', {tid: '0' if h.value(tid, 'f') == '1' else '1'})


class RunConfigTests(SimpleTestCase):
    def test_limit_must_be_positive(self):
        with self.assertRaises(ValidationError):
            RunConfig(command='decompose', bound=[['x1']], limit=0)

    def test_dependency_checks_need_rhs(self):
        with self.assertRaises(ValidationError):
            RunConfig(command='check-fd', lhs=['x1'])

    def test_empty_bound_set(self):
        with self.assertRaises(ValidationError):
            RunConfig(command='decompose', bound=[[]])


class SelectAlgorithmTests(SimpleTestCase):
    def select(self, R, bound, free=None):
        return select_algorithm(RunConfig(command='decompose', bound=bound, free=free), R)

    def test_auto(self):
        self.assertEqual(self.select(xnor_table(), [['x1', 'x4']]), Algorithm.ALPHA)
        self.assertEqual(self.select(two_bridge_table(), [['x1', 'x4', 'x5'], ['x2', 'x3']]),
                         Algorithm.BETA)
        self.assertEqual(self.select(shared_table(), [['x2', 'x4', 'x5']], ['x1', 'x2', 'x3']),
                         Algorithm.GAMMA)
        self.assertEqual(self.select(partial_table(), [['x1', 'x2', 'x4']]), Algorithm.DELTA)

    def test_explicit_choice_wins(self):
        cfg = RunConfig(command='decompose', bound=[['x1', 'x4']], algorithm='delta')
        self.assertEqual(select_algorithm(cfg, xnor_table()), Algorithm.DELTA)


class DecomposeCommandTests(SimpleTestCase):
    def test_alpha_report(self):
        code, report = decompose(fixture_text('xnor4.tt'), ['x1', 'x4'])
        self.assertEqual(code, EXIT_OK)
        lines = report.splitlines()
        self.assertEqual(lines[:5], [REPORT_HEADER, 'command: decompose', 'algorithm: alpha',
                                     'bound: x1,x4', 'free: x2,x3'])
        for expected in ('## chart M_ZY', '## chart M_ZW', 'k: 2', 'bits: 1',
                         'nontrivial: true', 'W=0: P00∨11 {t0 t2 t4 t6 t9 t11 t13 t15}',
                         '## T_g', '## T_h', 'maximal: true', 'minimal: skipped',
                         'result: ok'):
            self.assertIn(expected, lines)

    def test_deterministic(self):
        text = serialize(partial_table())
        self.assertEqual(decompose(text, ['x1', 'x2', 'x4']), decompose(text, ['x1', 'x2', 'x4']))
        text = serialize(two_bridge_table())
        self.assertEqual(decompose(text, ['x1', 'x4', 'x5'], seed=3).report,
                         decompose(text, ['x1', 'x4', 'x5'], seed=4).report)

    def test_dont_cares_run_delta(self):
        code, report = decompose(serialize(partial_table()), ['x1', 'x2', 'x4'], mcp='enumerate')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('algorithm: delta', report)
        self.assertIn('solutions: 2', report)
        self.assertIn('## solution 2: chart M_ZY reduced', report)
        self.assertIn('dropped: P010', report)

    def test_shared_attribute_runs_gamma(self):
        code, report = decompose(serialize(shared_table()), ['x2', 'x4', 'x5'],
                                 free=['x1', 'x2', 'x3'], enumerate_gamma=True)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('algorithm: gamma', report)
        self.assertIn('solutions: 2', report)
        self.assertIn('## solution 1: chart M_ZV', report)

    def test_several_bound_sets_run_beta(self):
        code, report = decompose(serialize(two_bridge_table()), ['x1', 'x4', 'x5'], ['x2', 'x3'])
        self.assertEqual(code, EXIT_OK)
        self.assertIn('bound: x1,x4,x5 / x2,x3', report)
        self.assertIn('## part 2: T_g', report)
        self.assertIn('fd Y2->W2: true', report)

    def test_binary_encoding(self):
        code, report = decompose(fixture_text('xnor4.tt'), ['x1', 'x4'], encoding='binary')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('bridge W0 { 0 1 }', report)

    def test_usage_errors(self):
        text = fixture_text('xnor4.tt')
        for cfg in (RunConfig(command='decompose'),
                    RunConfig(command='decompose', bound=[['x1']], algorithm='gamma'),
                    RunConfig(command='decompose', bound=[['x1', 'y']]),
                    RunConfig(command='decompose', bound=[['x1'], ['x2']], algorithm='alpha')):
            code, report = run(cfg, text)
            self.assertEqual(code, EXIT_USAGE, cfg)
            self.assertTrue(report.startswith(f"{REPORT_HEADER}\nerror: "))

    def test_alpha_rejects_dont_cares(self):
        code, report = decompose(serialize(partial_table()), ['x1', 'x2', 'x4'], algorithm='alpha')
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('use fda_delta', report)

    def test_parse_error(self):
        code, report = decompose("var a\noutput f\n0 | 1\n", ['a'])
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('1 input vector(s) have no row', report)

    def test_all_dont_care_table(self):
        R = boolean_table(3, lambda *xs: False)
        R = R.with_values('f', {t: DONT_CARE for t in R.tids})
        code, report = decompose(serialize(R), ['x1', 'x2'])
        self.assertEqual(code, EXIT_OK)
        lines = report.splitlines()
        for expected in ('## chart M_ZW', '(no columns)', 'k: 1', 'nontrivial: false',
                         'degenerate: true', 'dropped: P11'):
            self.assertIn(expected, lines)

    def test_extend_missing(self):
        code, report = decompose("var a\nvar b\noutput f\n0 0 | 1\n1 1 | 0\n", ['a'],
                                 extend_missing=True)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('algorithm: delta', report)

    def test_missing_file(self):
        code, _ = run(RunConfig(command='decompose', bound=[['x1']],
                                input_path='/nonexistent/table.tt'))
        self.assertEqual(code, EXIT_USAGE)


class ChartAndCheckCommandTests(SimpleTestCase):
    def test_chart(self):
        code, report = run(RunConfig(command='chart', bound=[['x1', 'x4']]),
                           fixture_text('xnor4.tt'))
        self.assertEqual(code, EXIT_OK)
        self.assertIn('rows x2,x3 / columns x1,x4', report)

    def test_check_fd(self):
        code, report = run(RunConfig(command='check-fd', lhs=['D'], rhs=['P']),
                           fixture_text('airline.tt'))
        # a failing dependency is a result, not an error
        self.assertEqual(code, EXIT_OK)
        self.assertIn('FD D -> P: fails (witness t0, t2)', report)

    def test_check_mvd(self):
        code, report = run(RunConfig(command='check-mvd', lhs=['F'], rhs=['D'], dot=True),
                           fixture_text('airline.tt'))
        self.assertEqual(code, EXIT_OK)
        self.assertIn('MVD F ->> D: holds', report)
        self.assertIn('lossless join: true', report)
        self.assertIn('## graph', report)

    def test_check_mvd_failure(self):
        _, report = run(RunConfig(command='check-mvd', rhs=['D']), fixture_text('airline.tt'))
        self.assertIn('MVD {} ->> D: fails', report)
        self.assertIn('lossless join: false', report)


class VerifyCommandTests(SimpleTestCase):
    def test_own_tables(self):
        R = xnor_table()
        d = fda_alpha(R, ['x1', 'x4'])
        code, report = run(RunConfig(command='verify'), serialize(R),
                           g_texts=[serialize(d.table_g)], h_text=serialize(d.table_h))
        self.assertEqual(code, EXIT_OK)
        self.assertIn('result: ok', report)

    def test_wrong_h_table(self):
        R = xnor_table()
        d = fda_alpha(R, ['x1', 'x4'])
        code, report = run(RunConfig(command='verify'), serialize(R),
                           g_texts=[serialize(d.table_g)], h_text=serialize(bad_h_table(d)))
        self.assertEqual(code, EXIT_VERIFICATION)
        self.assertIn('recomposition: false', report)
        self.assertIn('result: FAILED', report)

    def test_without_h_table(self):
        code, _ = run(RunConfig(command='verify'), serialize(xnor_table()), g_texts=[])
        self.assertEqual(code, EXIT_USAGE)


class ManagementCommandTests(SimpleTestCase):
    def invoke(self, *args):
        return CliRunner().invoke(command, [str(a) for a in args])

    def test_decompose(self):
        result = self.invoke('decompose', FIXTURES / 'xnor4.tt', '--bound', 'x1,x4')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(result.output.startswith(REPORT_HEADER))
        self.assertIn('result: ok', result.output)

    def test_output_file(self):
        with TemporaryDirectory() as tmp:
            target = Path(tmp) / 'report.txt'
            result = self.invoke('chart', FIXTURES / 'xnor4.tt', '--bound', 'x1 x4',
                                 '--output', target)
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertIn('## chart M_ZY', target.read_text(encoding='utf-8'))

    def test_usage_error(self):
        result = self.invoke('decompose', FIXTURES / 'xnor4.tt', '--bound', 'x1,nope')
        self.assertEqual(result.exit_code, 1)

    def test_verification_failure(self):
        R = xnor_table()
        d = fda_alpha(R, ['x1', 'x4'])
        with TemporaryDirectory() as tmp:
            g, h = Path(tmp) / 'g.tt', Path(tmp) / 'h.tt'
            g.write_text(serialize(d.table_g), encoding='utf-8')
            h.write_text(serialize(bad_h_table(d)), encoding='utf-8')
            result = self.invoke('verify', FIXTURES / 'xnor4.tt', '--g', g, '--h', h)
        self.assertEqual(result.exit_code, 2)
        self.assertIn('result: FAILED', result.output)

    def test_three_valued_fixture(self):
        result = self.invoke('decompose', FIXTURES / 'partial3.tt', '--bound', 'x2,x3',
                             '--extend-missing')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('k: 3', result.output)
