#  Copyright 2026 su23 contributors
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#   http://www.apache.org/licenses/LICENSE-2.0
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
import dataclasses
import json
from unittest import TestCase

from su23.algebra.linalg import Mat
from su23.gens.builder import build_generators
from su23.gens.gen_case import GenCase
from su23.gens.search import search_parameter
from su23.verify import commutator, generator_sanity, irreducibility, n11, n8, small_q, spectral, trace_suite
from su23.verify.check import CheckRecorder
from su23.verify.check_result import STATUS_FAILED, STATUS_PASSED, STATUS_SKIPPED
from su23.verify.field_counts import check_field_counts
from su23.verify.matrix_runner import run_matrix, verify_cell
from su23.verify.report_renderer import FORMAT_CSV, FORMAT_JSON, FORMAT_TEXT, render_report
from su23.verify.run_config import RunConfig
from su23.verify.verifier import SUITE_NAMES, Verifier
from su23.verify.verify_report import CELL_EXCLUDED, CELL_PASSED, CELL_UNSUPPORTED


def _checks(report, suite):
    return {result.name: result for result in report.check_results if result.suite == suite}


def _triple(n, q):
    case = GenCase.for_cell(n, q)
    return build_generators(case, search_parameter(case))


def _with_conjugate_parameter(tri):
    """The same matrices, labelled with a^q instead of a."""
    return dataclasses.replace(tri, a=tri.a.frobenius_q())


def _with_trivial_generators(tri):
    identity = Mat.identity(tri.ctx, tri.n)
    return dataclasses.replace(tri, x=identity, y=identity)


def _statuses(results):
    return {result.name: result.status for result in results}


def _failed_names(results):
    return {result.name for result in results if result.status == STATUS_FAILED}


class TestVerifySuites(TestCase):

    def test_excluded_cell(self):
        report = Verifier(5, 2).execute()
        self.assertEqual(report.status, CELL_EXCLUDED)
        self.assertTrue(report.is_passed())
        self.assertIn('exceptions', report.reason)

    def test_unsupported_cell(self):
        self.assertEqual(Verifier(7, 4).execute().status, CELL_UNSUPPORTED)
        self.assertEqual(Verifier(9, 6).execute().status, CELL_UNSUPPORTED)

    def test_generator_sanity(self):
        for n, q in ((9, 2), (10, 2), (12, 13), (11, 3), (13, 9)):
            report = Verifier(n, q, suites=[generator_sanity.SUITE]).execute()
            self.assertEqual(report.status, CELL_PASSED, [str(r) for r in report.get_check_failures()])
            checks = _checks(report, generator_sanity.SUITE)
            self.assertEqual(checks['y_order_three'].status, STATUS_PASSED)
            self.assertEqual(checks['hat_x_involution'].status, STATUS_PASSED)

    def test_q2_skips_invariant_factors(self):
        report = Verifier(9, 2, suites=[generator_sanity.SUITE]).execute()
        checks = _checks(report, generator_sanity.SUITE)
        self.assertEqual(checks['x_invariant_factors'].status, STATUS_SKIPPED)

    def test_n11_invariant_factors(self):
        report = Verifier(11, 3, suites=[generator_sanity.SUITE]).execute()
        checks = _checks(report, generator_sanity.SUITE)
        self.assertEqual(checks['n11_x_invariant_factors'].status, STATUS_PASSED)
        self.assertEqual(checks['n11_y_invariant_factors'].status, STATUS_PASSED)
        self.assertEqual(checks['invariant_form_unique'].status, STATUS_PASSED)

    def test_trace_recovery_suite(self):
        report = Verifier(12, 13, suites=[trace_suite.SUITE]).execute()
        self.assertEqual(_checks(report, trace_suite.SUITE)['recovers_a'].status, STATUS_PASSED)

    def test_trace_recovery_skipped_for_q2(self):
        report = Verifier(9, 2, suites=[trace_suite.SUITE]).execute()
        self.assertIn(trace_suite.SUITE, report.skipped_suites)

    def test_commutator_action(self):
        report = Verifier(12, 13, suites=[commutator.SUITE]).execute()
        checks = _checks(report, commutator.SUITE)
        self.assertEqual(checks['s_invariant'].status, STATUS_PASSED)
        self.assertEqual(checks['permutes_rest'].status, STATUS_PASSED)

    def test_commutator_not_applicable_for_n8(self):
        report = Verifier(8, 7, suites=[commutator.SUITE]).execute()
        self.assertIn(commutator.SUITE, report.skipped_suites)
        self.assertEqual(report.status, CELL_PASSED)

    def test_regime_suites_are_skipped_elsewhere(self):
        report = Verifier(12, 13, suites=[n8.SUITE, n11.SUITE]).execute()
        self.assertEqual(sorted(report.skipped_suites), sorted([n8.SUITE, n11.SUITE]))
        self.assertEqual(report.check_results, [])

    def test_n11_suite(self):
        report = Verifier(11, 3, suites=[n11.SUITE]).execute()
        checks = _checks(report, n11.SUITE)
        self.assertEqual(checks['trace_x'].status, STATUS_PASSED)
        self.assertEqual(checks['trace_y'].status, STATUS_PASSED)
        self.assertEqual(checks['charpoly_xy'].status, STATUS_PASSED)

    def test_small_q_certificate_q2(self):
        report = Verifier(8, 2, suites=[small_q.SUITE]).execute()
        self.assertEqual(report.status, CELL_PASSED, [str(r) for r in report.get_check_failures()])
        self.assertTrue(report.check_results)

    def test_field_counts(self):
        results = check_field_counts(5)
        self.assertTrue(results)
        self.assertFalse([result for result in results if result.failed])

    def test_undeclared_check(self):
        checks = CheckRecorder('demo', {'known': 'a claim'})
        checks.holds('known', True)
        with self.assertRaises(KeyError):
            checks.holds('unknown', True)

    def test_finding_does_not_fail(self):
        checks = CheckRecorder('demo', {'display': 'a closed form'})
        checks.finding('display', False, {'value': 3})
        self.assertFalse(checks.results[0].failed)

    def test_suite_order(self):
        self.assertEqual(SUITE_NAMES[0], generator_sanity.SUITE)
        self.assertEqual(len(SUITE_NAMES), 8)

    def test_report_omits_timings_by_default(self):
        report = verify_cell(9, 2, suites=[generator_sanity.SUITE])
        self.assertNotIn('timings', report.to_dict())
        self.assertIn('timings', report.to_dict(include_timings=True))

    def test_matrix_rendering(self):
        config = RunConfig(cells=[(9, 2), (5, 2)], suites=[generator_sanity.SUITE], counts=True)
        report = run_matrix(config)
        self.assertTrue(report.is_passed())
        self.assertEqual(report.counts(), {CELL_PASSED: 1, CELL_EXCLUDED: 1})
        document = json.loads(render_report(report, FORMAT_JSON))
        self.assertTrue(document['passed'])
        self.assertEqual([cell['status'] for cell in document['cells']], [CELL_PASSED, CELL_EXCLUDED])
        self.assertEqual(document['fields'][0]['q'], 2)
        self.assertIn('All checks passed', render_report(report, FORMAT_TEXT))
        self.assertTrue(render_report(report, FORMAT_CSV).startswith('n,q,'))

    def test_spectral_structure(self):
        for n, q in ((12, 13), (13, 9), (14, 4)):
            report = Verifier(n, q, suites=[spectral.SUITE]).execute()
            self.assertEqual(report.status, CELL_PASSED, [str(r) for r in report.get_check_failures()])
            statuses = _statuses(report.check_results)
            for name in ('bireflection', 'fixed_on_s', 'diagonalizable', 'transpose_diagonalizable', 'sigma_in_field',
                         'sigma_order', 'eigenvector', 'transpose_eigenvector', 'x_swaps_eigenvectors',
                         'transpose_x_swaps_eigenvectors', 'fixed_vector', 'difference_vector', 'premise_in_s',
                         'premise_minor', 'premise_excludes_v'):
                self.assertEqual(statuses[name], STATUS_PASSED, f'{name} for ({n},{q})')
        statuses = _statuses(Verifier(14, 4, suites=[spectral.SUITE]).execute().check_results)
        self.assertEqual(statuses['sigma_is_a_cubed'], STATUS_PASSED)

    def test_spectral_structure_with_wrong_parameter(self):
        tri = _with_conjugate_parameter(_triple(12, 13))
        self.assertIn('fixed_vector', _failed_names(spectral.check_spectral_structure(tri)))

    def test_spectral_structure_skipped_for_small_q(self):
        report = Verifier(9, 3, suites=[spectral.SUITE]).execute()
        self.assertIn(spectral.SUITE, report.skipped_suites)

    def test_irreducibility_by_spinning(self):
        report = Verifier(12, 13, suites=[irreducibility.SUITE]).execute()
        self.assertEqual(report.status, CELL_PASSED, [str(r) for r in report.get_check_failures()])
        spins = [r for r in report.check_results if r.name in ('spin_generators', 'spin_transposes')]
        self.assertEqual(len(spins), 6)
        self.assertTrue(all(r.status == STATUS_PASSED for r in spins))

    def test_irreducibility_of_trivial_generators(self):
        tri = _with_trivial_generators(_triple(12, 13))
        failed = _failed_names(irreducibility.check_irreducibility(tri, seed=3))
        self.assertEqual(failed, {'spin_generators', 'spin_transposes'})

    def test_irreducibility_n8_determinants(self):
        for q in (7, 9):
            report = Verifier(8, q, suites=[irreducibility.SUITE]).execute()
            self.assertEqual(report.status, CELL_PASSED, [str(r) for r in report.get_check_failures()])
            statuses = _statuses(report.check_results)
            self.assertEqual(statuses['n8_det_m_nonzero'], STATUS_PASSED)
            self.assertEqual(statuses['n8_det_n_nonzero'], STATUS_PASSED)
            self.assertIn(statuses['n8_det_m'], (STATUS_PASSED, STATUS_SKIPPED))
            self.assertIn(statuses['n8_det_n'], (STATUS_PASSED, STATUS_SKIPPED))

    def test_irreducibility_n11_determinants_and_centralizers(self):
        report = Verifier(11, 3, suites=[irreducibility.SUITE]).execute()
        self.assertEqual(report.status, CELL_PASSED, [str(r) for r in report.get_check_failures()])
        statuses = _statuses(report.check_results)
        for name in ('n11_f1_f2_nonzero', 'n11_det_a', 'n11_det_b', 'n11_centralizer_x', 'n11_centralizer_y',
                     'n11_centralizer_xy', 'n11_centralizer_formula'):
            self.assertEqual(statuses[name], STATUS_PASSED, name)
        statuses = _statuses(Verifier(11, 4, suites=[irreducibility.SUITE]).execute().check_results)
        self.assertEqual(statuses['n11_det_b'], STATUS_SKIPPED)
        self.assertEqual(statuses['n11_det_a'], STATUS_PASSED)

    def test_n8_suite(self):
        report = Verifier(8, 7, suites=[n8.SUITE]).execute()
        self.assertEqual(report.status, CELL_PASSED, [str(r) for r in report.get_check_failures()])
        statuses = _statuses(report.check_results)
        for name in ('charpoly_xy', 'charpoly_xy_inverse', 'gamma_closed_form', 'commutator_charpoly',
                     'commutator_coprime', 'power_24', 'power_18', 'power_30', 'power_12'):
            self.assertEqual(statuses[name], STATUS_PASSED, name)

    def test_n8_suite_char_three(self):
        report = Verifier(8, 9, suites=[n8.SUITE]).execute()
        self.assertEqual(report.status, CELL_PASSED, [str(r) for r in report.get_check_failures()])
        statuses = _statuses(report.check_results)
        for name in ('charpoly_xy', 'charpoly_xy_inverse', 'b_simple_eigenvalue', 'b_eigenvalue_one_simple'):
            self.assertEqual(statuses[name], STATUS_PASSED, name)

    def test_n8_suite_with_wrong_parameter(self):
        for q in (7, 9):
            tri = _with_conjugate_parameter(_triple(8, q))
            self.assertIn('charpoly_xy', _failed_names(n8.check_n8(tri)), f'q={q}')

    def test_n11_suite_with_wrong_parameter(self):
        tri = _with_conjugate_parameter(_triple(11, 3))
        failed = _failed_names(n11.check_n11(tri))
        self.assertIn('charpoly_xy', failed)
        self.assertIn('trace_power', failed)

    def test_small_q_commutator_words(self):
        report = Verifier(9, 3, suites=[small_q.SUITE]).execute()
        self.assertEqual(report.status, CELL_PASSED, [str(r) for r in report.get_check_failures()])
        self.assertEqual(_statuses(report.check_results), {'coverage': STATUS_PASSED})

    def test_small_q_commutator_words_of_trivial_generators(self):
        tri = _with_trivial_generators(_triple(9, 3))
        self.assertEqual(_failed_names(small_q.check_small_q_certificates(tri)), {'coverage'})

    def test_small_q_split_certificate(self):
        self.assertTrue(small_q.splitting_case(15, 3))
        report = Verifier(15, 3, suites=[small_q.SUITE]).execute()
        self.assertEqual(report.status, CELL_PASSED, [str(r) for r in report.get_check_failures()])
        self.assertEqual(_statuses(report.check_results), {'zeta_splits': STATUS_PASSED, 'y_splits': STATUS_PASSED,
                                                          'monomial_on_t1': STATUS_PASSED,
                                                          'coverage_t2': STATUS_PASSED})

    def test_small_q_split_certificate_of_trivial_generators(self):
        tri = _with_trivial_generators(_triple(15, 3))
        self.assertEqual(_failed_names(small_q.check_small_q_certificates(tri)), {'coverage_t2'})
