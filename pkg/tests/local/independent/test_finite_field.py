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
from collections import Counter
from unittest import TestCase

from su23.algebra.ff import make_field, make_quadratic_extension
from su23.exceptions.exceptions import DegreeZero, NotPrime


class TestFiniteField(TestCase):

    def test_modulus_gf4(self):
        self.assertEqual(make_field(2, 2).modulus, (1, 1, 1))

    def test_modulus_gf9_is_lex_smallest(self):
        self.assertEqual(make_field(3, 2).modulus, (1, 0, 1))

    def test_not_prime(self):
        with self.assertRaises(NotPrime):
            make_field(4, 1)

    def test_degree_zero(self):
        with self.assertRaises(DegreeZero):
            make_field(2, 0)

    def test_same_context_for_repeated_calls(self):
        self.assertIs(make_field(5, 2), make_field(5, 2))

    def test_field_axioms_gf9(self):
        ctx = make_field(3, 2)
        elements = list(ctx.elements())
        for x in elements:
            self.assertEqual(x + (-x), 0)
            if x:
                self.assertEqual(x * x.inverse(), 1)
            for y in elements:
                self.assertEqual(x * y, y * x)
                self.assertEqual((x + y) * x, x * x + y * x)

    def test_frobenius_is_an_involution(self):
        ctx = make_quadratic_extension(5)
        for x in ctx.elements():
            self.assertEqual(x.frobenius_q().frobenius_q(), x)

    def test_frobenius_is_a_ring_homomorphism(self):
        ctx = make_quadratic_extension(4)
        for x in ctx.elements():
            for y in ctx.elements():
                self.assertEqual((x * y).frobenius_q(), x.frobenius_q() * y.frobenius_q())
                self.assertEqual((x + y).frobenius_q(), x.frobenius_q() + y.frobenius_q())

    def test_fixed_points_gf9(self):
        ctx = make_quadratic_extension(3)
        fixed = [x for x in ctx.elements() if x.frobenius_q() == x]
        self.assertEqual(len(fixed), 3)
        self.assertTrue(all(x.in_gfq() for x in fixed))

    def test_frobenius_swaps_roots_in_gf4(self):
        ctx = make_quadratic_extension(2)
        omega = ctx.generator_t()
        self.assertEqual(omega.frobenius_q(), omega * omega)
        self.assertEqual(omega.multiplicative_order(), 3)

    def test_norm_fibers_gf16(self):
        ctx = make_quadratic_extension(4)
        fibers = Counter(x.norm() for x in ctx.elements() if x)
        self.assertEqual(len(fibers), 3)
        self.assertTrue(all(size == 5 for size in fibers.values()))
        self.assertTrue(all(value.in_gfq() for value in fibers))

    def test_norm_of_one(self):
        ctx = make_quadratic_extension(7)
        self.assertEqual(ctx.elem(1).norm(), 1)

    def test_norm_three_has_q_plus_one_preimages(self):
        ctx = make_quadratic_extension(5)
        self.assertEqual(sum(1 for x in ctx.elements() if x.norm() == 3), 6)

    def test_frobenius_fixed_field_law(self):
        ctx = make_field(2, 4)
        for x in ctx.elements():
            self.assertEqual(x ** ctx.order, x)

    def test_format(self):
        ctx = make_field(3, 2)
        self.assertEqual(ctx.format(0), '0')
        self.assertEqual(ctx.format(ctx.generator_t().code), 'z')
        self.assertEqual(ctx.format(ctx.elem(2).code), '2')
