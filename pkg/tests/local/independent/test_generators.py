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
from unittest import TestCase

from su23.algebra.ff import make_quadratic_extension
from su23.algebra.linalg import Mat, centralizer_dim, invariant_factors, preserves_form, unit_vector
from su23.algebra.poly import Poly
from su23.exceptions.exceptions import BadParameter, UnsupportedCase
from su23.gens.builder import build_generators
from su23.gens.conditions import check_conditions
from su23.gens.gen_case import GenCase, TAG_N11, TAG_N8, TAG_P3, TAG_Q2
from su23.gens.gen_triple import GenTriple
from su23.gens.search import STRATEGY_EXHAUSTIVE, parse_parameter, search_parameter
from su23.gens.tables import SMALL_Q_WORDS, commutator_word_exponents, format_coefficients, tables_as_csv_rows, \
    tables_as_dict
from su23.gens.trace_recovery import recover, trace_recover_a


def _triple(n, q, strategy='hinted'):
    case = GenCase.for_cell(n, q)
    return build_generators(case, search_parameter(case, strategy))


class TestGenerators(TestCase):

    def test_case_tags(self):
        self.assertEqual(GenCase.for_cell(9, 2).tag, TAG_Q2)
        self.assertEqual(GenCase.for_cell(11, 3).tag, TAG_N11)
        self.assertEqual(GenCase.for_cell(8, 9).tag, TAG_N8)
        self.assertEqual(GenCase.for_cell(10, 9).tag, TAG_P3)

    def test_excluded_pairs(self):
        with self.assertRaises(UnsupportedCase) as context:
            GenCase.for_cell(5, 2)
        self.assertIn('(5, 2)', str(context.exception))

    def test_small_dimension_rejected(self):
        with self.assertRaises(UnsupportedCase):
            GenCase.for_cell(7, 4)

    def test_q_not_a_prime_power(self):
        with self.assertRaises(UnsupportedCase):
            GenCase.for_cell(9, 6)

    def test_q2_needs_no_parameter(self):
        self.assertIsNone(search_parameter(GenCase.for_cell(9, 2)))

    def test_generator_orders_and_form(self):
        for n, q in ((9, 2), (10, 2), (12, 4), (12, 13), (13, 9), (8, 7)):
            tri = _triple(n, q)
            identity = Mat.identity(tri.ctx, n)
            self.assertEqual(tri.x * tri.x, identity, f'x^2 for {n},{q}')
            self.assertEqual(tri.y ** 3, identity, f'y^3 for {n},{q}')
            self.assertTrue(preserves_form(tri.x, tri.J), f'x preserves J for {n},{q}')
            self.assertTrue(preserves_form(tri.y, tri.J), f'y preserves J for {n},{q}')
            self.assertEqual(tri.J.T.psi(), tri.J, f'J is hermitian for {n},{q}')
            self.assertEqual(tri.y.det(), 1)
            self.assertEqual(tri.hat_x.det(), 1)

    def test_similarity_invariants(self):
        tri = _triple(12, 13)
        t = Poly.t(tri.ctx)
        m, r = 4, 0
        self.assertEqual(invariant_factors(tri.x), [t - 1] * (m - r) + [t * t - 1] * (m + r))
        self.assertEqual(invariant_factors(tri.y), [t ** 3 - 1] * m)

    def test_form_determinant(self):
        tri = _triple(12, 13)
        d = tri.derived
        self.assertEqual(tri.J.det(), -(d.c ** 9) * d.gamma * d.gamma)

    def test_q2_y_cycles_last_three(self):
        tri = _triple(9, 2)
        block = tri.y.submatrix([6, 7, 8])
        self.assertTrue(tri.y.leaves_invariant([6, 7, 8]))
        self.assertFalse(block.is_identity())
        for row in block.rows:
            self.assertEqual(sorted(row), [0, 0, 1])

    def test_n11_generators(self):
        tri = _triple(11, 3)
        self.assertEqual(tri.x.trace(), -1)
        self.assertEqual(tri.y.trace(), -4)
        self.assertEqual(tri.y.column(0), unit_vector(11, 0))
        a = tri.a
        expected = [0] * 11
        expected[0] = (a + a.frobenius_q() + 1).code
        expected[9] = tri.ctx.elem(-1).code
        expected[10] = tri.ctx.elem(-1).code
        self.assertEqual(tri.y.column(10), expected)

    def test_n11_centralizers(self):
        tri = _triple(11, 3)
        self.assertEqual(centralizer_dim(tri.x), 61)
        self.assertEqual(centralizer_dim(tri.y), 51)
        self.assertEqual(centralizer_dim(tri.xy()), 11)

    def test_hinted_parameter_for_q13(self):
        case = GenCase.for_cell(12, 13)
        a = search_parameter(case)
        self.assertTrue(check_conditions(case, a).is_passed())
        self.assertEqual(a.norm(), 3)

    def test_exhaustive_is_deterministic(self):
        case = GenCase.for_cell(12, 4)
        first = search_parameter(case, STRATEGY_EXHAUSTIVE)
        self.assertEqual(first, search_parameter(case, STRATEGY_EXHAUSTIVE))
        self.assertTrue(check_conditions(case, first).is_passed())

    def test_zero_parameter_fails(self):
        case = GenCase.for_cell(12, 5)
        ctx = make_quadratic_extension(5)
        self.assertFalse(check_conditions(case, ctx.elem(0)).is_passed())
        with self.assertRaises(BadParameter):
            build_generators(case, ctx.elem(0))

    def test_parameter_from_minimal_polynomial(self):
        case = GenCase.for_cell(11, 3)
        a = parse_parameter(case, 'poly:11,-1,1')
        self.assertTrue(check_conditions(case, a).is_passed())

    def test_bad_parameter_spec(self):
        with self.assertRaises(BadParameter):
            parse_parameter(GenCase.for_cell(12, 13), 'one,two')

    def test_trace_recovery(self):
        for n, q in ((12, 13), (10, 9), (8, 7), (8, 9), (8, 27), (11, 3), (11, 4)):
            tri = _triple(n, q)
            self.assertEqual(trace_recover_a(tri), tri.a, f'{n},{q}')

    def test_trace_recovery_with_wrong_parameter(self):
        for n, q in ((8, 7), (11, 3), (11, 4)):
            tri = _triple(n, q)
            recovery = recover(dataclasses.replace(tri, a=tri.a.frobenius_q()))
            self.assertEqual(recovery.value, tri.a)
            self.assertFalse(recovery.matches, f'{n},{q}')

    def test_export_round_trip(self):
        tri = _triple(10, 4)
        restored = GenTriple.from_dict(tri.to_dict())
        self.assertEqual(restored.x, tri.x)
        self.assertEqual(restored.y, tri.y)
        self.assertEqual(restored.J, tri.J)
        self.assertEqual(restored.a, tri.a)

    def test_tables(self):
        self.assertEqual(commutator_word_exponents(8, 2), (1, 2, 6, 8))
        self.assertIsNone(commutator_word_exponents(8, 4))
        self.assertEqual(SMALL_Q_WORDS[2].exponents, (1, 6, 8, 15, 33))
        self.assertEqual(format_coefficients((-1, -1, 1)), "t^2 - t - 1")
        document = tables_as_dict()
        self.assertEqual(len(document["small_q_words"]), len(SMALL_Q_WORDS))
        self.assertTrue(all(len(row) == 6 for row in tables_as_csv_rows()))

    def test_hinted_parameters_are_admissible(self):
        for n, q in ((12, 4), (12, 16), (8, 9), (8, 11), (11, 4), (14, 3), (15, 7)):
            case = GenCase.for_cell(n, q)
            a = search_parameter(case)
            self.assertTrue(check_conditions(case, a).is_passed(), f"{n},{q}")
