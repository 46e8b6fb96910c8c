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
from unittest import TestCase

from su23.algebra.ff import make_quadratic_extension
from su23.algebra.integers import euler_phi, factor_integer, prime_power
from su23.algebra.linalg import Mat
from su23.exceptions.exceptions import NotInvertible
from su23.gens.builder import build_generators
from su23.gens.gen_case import GenCase
from su23.gens.search import search_parameter
from su23.gens.tables import commutator_word_exponents
from su23.groupfacts.brute_force import enumerate_su
from su23.groupfacts.coverage import prime_coverage_certificate
from su23.groupfacts.element_order import element_order
from su23.groupfacts.group_order import gu_order, su_order


def _triple(n, q):
    case = GenCase.for_cell(n, q)
    return build_generators(case, search_parameter(case))


def _commutator_words(tri, exponents):
    commutator, xy = tri.commutator(), tri.xy()
    return [commutator * xy ** j for j in exponents]


class TestGroupFacts(TestCase):

    def test_integers(self):
        self.assertEqual(prime_power(27), (3, 3))
        self.assertIsNone(prime_power(12))
        self.assertEqual(euler_phi(168), 48)
        self.assertEqual(factor_integer(2 ** 28 * 255), {2: 28, 3: 1, 5: 1, 17: 1})

    def test_su8_prime_set(self):
        self.assertEqual(su_order(8, 2).prime_set, [2, 3, 5, 7, 11, 17, 43])

    def test_small_orders_match_enumeration(self):
        ctx = make_quadratic_extension(2)
        self.assertEqual(su_order(2, 2).order, 6)
        self.assertEqual(len(enumerate_su(ctx, 2)), 6)
        self.assertEqual(su_order(3, 2).order, 216)
        self.assertEqual(len(enumerate_su(ctx, 3)), 216)

    def test_gu_order(self):
        self.assertEqual(gu_order(3, 2).order, 3 * 216)
        self.assertTrue(su_order(9, 4).divides(gu_order(9, 4)))

    def test_center_primes(self):
        self.assertEqual(su_order(12, 5).center_primes(), [2, 3])
        self.assertEqual(su_order(8, 2).center_primes(), [])

    def test_element_order_identity(self):
        ctx = make_quadratic_extension(3)
        self.assertEqual(element_order(Mat.identity(ctx, 5)), 1)

    def test_element_order_singular(self):
        ctx = make_quadratic_extension(3)
        with self.assertRaises(NotInvertible):
            element_order(Mat.zeros(ctx, 3))

    def test_generator_orders(self):
        for n, q in ((9, 2), (12, 13), (11, 3), (8, 7)):
            tri = _triple(n, q)
            cap = su_order(n, q)
            self.assertEqual(element_order(tri.y, cap), 3)
            self.assertEqual(element_order(tri.hat_x, cap), 2)

    def test_element_order_matches_powers(self):
        tri = _triple(9, 2)
        word = tri.commutator() * tri.xy()
        order = element_order(word, gu_order(9, 2))
        self.assertTrue((word ** order).is_identity())
        for prime in factor_integer(order):
            self.assertFalse((word ** (order // prime)).is_identity())

    def test_coverage_su8(self):
        tri = _triple(8, 2)
        exponents = commutator_word_exponents(8, 2)
        certificate = prime_coverage_certificate(_commutator_words(tri, exponents), su_order(8, 2),
                                                 cap=gu_order(8, 2), exponents=exponents)
        self.assertTrue(certificate.is_passed())
        self.assertEqual(certificate.covered, [2, 3, 5, 7, 11, 17, 43])

    def test_coverage_su9_q3(self):
        tri = _triple(9, 3)
        exponents = commutator_word_exponents(9, 3)
        certificate = prime_coverage_certificate(_commutator_words(tri, exponents), su_order(9, 3),
                                                 cap=gu_order(9, 3), exponents=exponents)
        self.assertTrue(certificate.is_passed(), certificate.missing)

    def test_identity_covers_nothing(self):
        ctx = make_quadratic_extension(2)
        certificate = prime_coverage_certificate([Mat.identity(ctx, 8)], su_order(8, 2))
        self.assertFalse(certificate.is_passed())
        self.assertEqual(certificate.missing, su_order(8, 2).prime_set)
