import unittest
from fractions import Fraction

from homhopf.linear import LinearMap, identity, kron
from homhopf.report import AxiomResult, CheckReport
from homhopf.structures import PreconditionError, require

__author__ = "The homhopf developers"


class Logger(object):

    def __init__(self):
        self.log = []

    def debug(self, message):
        self.log.append(message)


class TestCheckReport(unittest.TestCase):

    def test_compare_pass(self):
        report = CheckReport('subject')
        result = report.compare('axiom', identity(4), identity(4), (2, 2))
        self.assertTrue(result.passed)
        self.assertEqual(result.witness, None)
        self.assertTrue(report.passed)

    def test_compare_witness_decoded(self):
        report = CheckReport('subject')
        altered = LinearMap([[1, 0, 0, 0],
                             [0, 1, 0, 0],
                             [0, 0, 1, 5],
                             [0, 0, 0, 1]])
        result = report.compare('axiom', identity(4), altered, (2, 2))
        self.assertFalse(result.passed)
        self.assertEqual(result.witness, (1, 1))
        self.assertEqual(result.lhs, (0, 0, 0, 1))
        self.assertEqual(result.rhs, (0, 0, 5, 1))
        self.assertFalse(report.passed)
        self.assertEqual(report.verdict(), 'FAIL')

    def test_first_failure_in_order(self):
        report = CheckReport('subject')
        report.record('first', True)
        report.record('second', False)
        report.record('third', False)
        self.assertEqual(report.first_failure().axiom, 'second')
        self.assertEqual([r.axiom for r in report.failures()], ['second', 'third'])

    def test_disabled_group_excluded(self):
        report = CheckReport('subject')
        report.record('core', True)
        report.record('optional', False, group='extra')
        self.assertFalse(report.passed)
        report.disable('extra')
        self.assertTrue(report.passed)
        self.assertEqual(report.failures(), [])
        report.enable('extra')
        self.assertFalse(report.passed)

    def test_extend_prefix(self):
        inner = CheckReport('inner')
        inner.record('unit', True)
        inner.disable('g')
        outer = CheckReport('outer').extend(inner, 'A')
        self.assertEqual(outer.axioms(), ['A:unit'])
        self.assertTrue('A:unit' in outer)
        self.assertEqual(outer.disabled_groups(), frozenset(['g']))

    def test_getitem_missing(self):
        report = CheckReport('subject')
        self.assertRaises(KeyError, lambda: report['missing'])

    def test_len_and_iter(self):
        report = CheckReport('subject')
        report.record('a', True)
        report.record('b', True)
        self.assertEqual(len(report), 2)
        self.assertEqual([r.axiom for r in report], ['a', 'b'])

    def test_result_str(self):
        result = AxiomResult('M3', False, 'monoidal', (0, 1), (Fraction(1, 2),), (0,))
        self.assertEqual(str(result),
                         '[FAIL] M3 (monoidal) witness=(0,1) lhs=(1/2) rhs=(0)')

    def test_result_equality(self):
        result = AxiomResult('E1', True)
        self.assertEqual(result, AxiomResult('E1', True))
        self.assertNotEqual(result, AxiomResult('E1', False))
        self.assertFalse(result == None)
        self.assertTrue(result != 'E1')

    def test_log(self):
        logger = Logger()
        report = CheckReport('subject')
        report.record('axiom', True)
        returned = report.log(logger)
        self.assertTrue(returned is report)
        self.assertEqual(logger.log, ['subject : BEGIN',
                                      'subject : [0] [PASS] axiom',
                                      'subject : END PASS'])

    def test_log_label(self):
        logger = Logger()
        CheckReport('subject').log(logger, 'label')
        self.assertEqual(logger.log, ['label : BEGIN', 'label : END PASS'])

    def test_log_without_logger(self):
        report = CheckReport('subject')
        self.assertTrue(report.log() is report)

    def test_parameters_copied(self):
        parameters = {'n': 1}
        report = CheckReport('subject', parameters)
        parameters['n'] = 2
        self.assertEqual(report.parameters, {'n': 1})

    def test_compare_three_factors(self):
        report = CheckReport('subject')
        lhs = kron(identity(2), identity(2), identity(2))
        rhs = kron(identity(2), identity(2), LinearMap([[1, 0], [0, 2]]))
        self.assertEqual(report.compare('a', lhs, rhs, (2, 2, 2)).witness, (0, 0, 1))


class TestRequire(unittest.TestCase):

    def test_require_pass(self):
        report = CheckReport('subject')
        self.assertTrue(require(report, 'build') is report)

    def test_require_fail(self):
        report = CheckReport('entwining')
        report.record('E3', False)
        try:
            require(report, 'build')
        except PreconditionError as e:
            self.assertTrue(e.report is report)
            self.assertTrue('E3' in str(e))
        else:
            self.fail("Expected PreconditionError")
