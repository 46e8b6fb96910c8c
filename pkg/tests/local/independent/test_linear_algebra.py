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
from random import Random
from unittest import TestCase

from su23.algebra.ff import make_field, make_quadratic_extension
from su23.algebra.linalg import Mat, centralizer_dim, charpoly, eigenspace, evaluate_polynomial, \
    fixed_space_rank_defect, invariant_factors, is_eigenvector, minimal_polynomial, preserves_form, random_vector, \
    span_contains, spin, unit_vector
from su23.algebra.poly import Poly
from su23.exceptions.exceptions import NotSquare


def _random_mat(ctx, n, seed):
    rng = Random(seed)
    return Mat(ctx, [random_vector(ctx, n, rng) for _ in range(n)])


def _cycle(ctx, n):
    return Mat.from_columns(ctx, [unit_vector(n, (i + 1) % n) for i in range(n)])


class TestLinearAlgebra(TestCase):

    def test_charpoly_identity(self):
        ctx = make_field(5, 1)
        t = Poly.t(ctx)
        self.assertEqual(charpoly(Mat.identity(ctx, 3)), (t - 1) ** 3)

    def test_cayley_hamilton(self):
        ctx = make_quadratic_extension(3)
        for seed in range(5):
            A = _random_mat(ctx, 6, seed)
            self.assertEqual(evaluate_polynomial(charpoly(A), A), Mat.zeros(ctx, 6))

    def test_invariant_factors_identity(self):
        ctx = make_field(3, 1)
        t = Poly.t(ctx)
        self.assertEqual(invariant_factors(Mat.identity(ctx, 2)), [t - 1, t - 1])

    def test_invariant_factors_multiply_to_charpoly(self):
        ctx = make_quadratic_extension(2)
        A = Mat.block_diagonal(ctx, [Mat.identity(ctx, 2), _cycle(ctx, 3), _random_mat(ctx, 3, 7)])
        factors = invariant_factors(A)
        product = Poly.one(ctx)
        for factor in factors:
            product = product * factor
        self.assertEqual(product, charpoly(A))
        for smaller, larger in zip(factors, factors[1:]):
            self.assertTrue(smaller.divides(larger))
        self.assertEqual(factors[-1], minimal_polynomial(A))

    def test_minimal_polynomial_of_diagonal(self):
        ctx = make_field(5, 1)
        t = Poly.t(ctx)
        A = Mat.diagonal(ctx, [2, 2, 3])
        self.assertEqual(minimal_polynomial(A), (t - 2) * (t - 3))

    def test_centralizer_of_identity(self):
        ctx = make_field(7, 1)
        self.assertEqual(centralizer_dim(Mat.identity(ctx, 4)), 16)

    def test_centralizer_of_cyclic_matrix(self):
        ctx = make_field(7, 1)
        self.assertEqual(centralizer_dim(_cycle(ctx, 5)), 5)

    def test_fixed_space_rank_defect(self):
        ctx = make_quadratic_extension(5)
        sigma = ctx.primitive_element
        s = ctx.element(sigma)
        self.assertEqual(fixed_space_rank_defect(Mat.identity(ctx, 4)), 0)
        self.assertEqual(fixed_space_rank_defect(Mat.diagonal(ctx, [s, s.inverse(), 1, 1])), 2)

    def test_not_square(self):
        ctx = make_field(3, 1)
        with self.assertRaises(NotSquare):
            charpoly(Mat.zeros(ctx, 2, 3))

    def test_spin_under_identity(self):
        ctx = make_field(3, 1)
        self.assertEqual(len(spin([[1, 2, 0]], [Mat.identity(ctx, 3)])), 1)

    def test_spin_under_cycle(self):
        ctx = make_field(3, 1)
        cycle = _cycle(ctx, 4)
        self.assertEqual(len(spin([unit_vector(4, 0)], [cycle])), 4)
        # the all-ones vector is fixed
        self.assertEqual(len(spin([[1, 1, 1, 1]], [cycle])), 1)

    def test_span_contains(self):
        ctx = make_field(5, 1)
        self.assertTrue(span_contains(ctx, [[1, 0, 1], [0, 1, 1]], [2, 3, 0]))
        self.assertFalse(span_contains(ctx, [[1, 0, 1], [0, 1, 1]], [1, 0, 0]))

    def test_eigenvectors(self):
        ctx = make_field(5, 1)
        A = Mat.diagonal(ctx, [2, 3, 3])
        self.assertEqual(len(eigenspace(A, 3)), 2)
        self.assertTrue(is_eigenvector(A, [1, 0, 0], 2))
        self.assertFalse(is_eigenvector(A, [1, 1, 0], 2))

    def test_determinant_and_inverse(self):
        ctx = make_quadratic_extension(4)
        A = _random_mat(ctx, 5, 3)
        if A.det():
            self.assertTrue((A * A.inverse()).is_identity())
        self.assertEqual((A * A).det(), A.det() * A.det())

    def test_permutations_preserve_identity_form(self):
        ctx = make_quadratic_extension(3)
        self.assertTrue(preserves_form(_cycle(ctx, 4), Mat.identity(ctx, 4)))
