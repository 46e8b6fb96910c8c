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

from su23.algebra.ff import make_field, make_quadratic_extension
from su23.algebra.poly import G1, G2, Poly, admissible_count_bound, admissible_polynomial, \
    count_admissible_roots, count_admissible_roots_by_enumeration, gcd, is_irreducible, \
    minimal_polynomial_over_prime_field, mult_order, order48_conditions, order48_direct, roots_by_enumeration, \
    roots_in_field, xgcd


class TestPolynomials(TestCase):

    def test_roots_of_cube_root_polynomial_in_gf4(self):
        ctx = make_field(2, 2)
        roots = roots_in_field(Poly.from_ints(ctx, [1, 1, 1]))
        self.assertEqual(len(roots), 2)
        self.assertTrue(all(multiplicity == 1 for _, multiplicity in roots))
        self.assertTrue(all(root.multiplicative_order() == 3 for root, _ in roots))

    def test_repeated_root(self):
        ctx = make_field(5, 1)
        t = Poly.t(ctx)
        roots = roots_in_field((t - 1) ** 3)
        self.assertEqual([(root.code, multiplicity) for root, multiplicity in roots], [(1, 3)])

    def test_roots_match_enumeration(self):
        ctx = make_quadratic_extension(3)
        t = Poly.t(ctx)
        f = (t ** 5 - t + 1) * (t ** 2 + 1)
        self.assertEqual(sorted(root for root, _ in roots_in_field(f)), sorted(roots_by_enumeration(f)))

    def test_g2_splits_in_gf_q2(self):
        for q in (3, 4, 5):
            ctx = make_quadratic_extension(q)
            roots = roots_in_field(admissible_polynomial(ctx, G2))
            self.assertEqual(sum(multiplicity for _, multiplicity in roots), q + 1)
            codes = {root.code for root, _ in roots}
            self.assertIn(0, codes)
            self.assertIn(ctx.elem(-2).code, codes)

    def test_gcd_is_monic_and_divides(self):
        ctx = make_field(5, 1)
        t = Poly.t(ctx)
        f = 2 * (t - 1) * (t - 2)
        g = 3 * (t - 1) * (t + 1)
        d = gcd(f, g)
        self.assertEqual(d, t - 1)
        self.assertTrue(d.divides(f))
        self.assertTrue(d.divides(g))

    def test_xgcd_bezout(self):
        ctx = make_quadratic_extension(3)
        t = Poly.t(ctx)
        f = t ** 4 + t + 2
        g = t ** 3 - t * t + 1
        d, u, v = xgcd(f, g)
        self.assertEqual(u * f + v * g, d)

    def test_degree_of_product(self):
        ctx = make_field(7, 1)
        t = Poly.t(ctx)
        self.assertEqual((t ** 3 + 2 * t) * (t ** 4 - 1), t ** 7 + 2 * t ** 5 - t ** 3 - 2 * t)
        self.assertEqual(((t ** 3 + 2) * (t ** 4 - 1)).degree, 7)

    def test_irreducible(self):
        ctx = make_field(3, 1)
        self.assertTrue(is_irreducible(Poly.from_ints(ctx, [1, 0, 1])))
        self.assertFalse(is_irreducible(Poly.from_ints(ctx, [2, 0, 1])))

    def test_order48_first_clause(self):
        ctx = make_quadratic_extension(7)
        report = order48_conditions(ctx.elem(0))
        self.assertFalse(report.passed)
        self.assertEqual(report.first_violated, 'gamma+0 != 0')
        self.assertFalse(order48_conditions(ctx.elem(2)).passed)

    def test_order48_clauses_agree_with_orders(self):
        ctx = make_quadratic_extension(7)
        for gamma in ctx.elements():
            self.assertEqual(order48_conditions(gamma).passed, order48_direct(gamma), repr(gamma))

    def test_norm_three_count_q5(self):
        ctx = make_quadratic_extension(5)
        self.assertEqual(count_admissible_roots(ctx, G1, 3), 6)

    def test_counts_agree_with_enumeration(self):
        for q, kappa in ((3, 1), (4, 3), (5, 3), (7, 3), (8, 3)):
            ctx = make_quadratic_extension(q)
            for kind in (G1, G2):
                self.assertEqual(count_admissible_roots(ctx, kind, kappa),
                                 count_admissible_roots_by_enumeration(ctx, kind, kappa), f'q={q} {kind}')

    def test_norm_count_bound_holds(self):
        for q, p, f in ((4, 2, 2), (16, 2, 4), (9, 3, 2), (25, 5, 2)):
            ctx = make_quadratic_extension(q)
            kappa = 1 if p == 3 else 3
            self.assertGreaterEqual(count_admissible_roots(ctx, G1, kappa), admissible_count_bound(q, p, f, G1),
                                    f"q={q}")

    def test_roots_in_extension_fields(self):
        for p, d in ((2, 2), (3, 2), (5, 2)):
            ctx = make_field(p, d)
            t = Poly.t(ctx)
            generator = ctx.generator_t()
            repeated = Poly.from_roots(ctx, [generator, generator, ctx.elem(1)])
            for f in (t, t * t + t + 1, repeated, minimal_polynomial_over_prime_field(generator)):
                expected = sorted(x.code for x in roots_by_enumeration(f))
                for bound in (10 ** 6, 0):
                    roots = roots_in_field(f, brute_force_bound=bound)
                    self.assertEqual([root.code for root, _ in roots], expected, f'GF({p}^{d}) {f!r} bound={bound}')
            multiplicities = {root.code: m for root, m in roots_in_field(repeated, brute_force_bound=10 ** 6)}
            self.assertEqual(multiplicities[generator.code], 2)
            self.assertEqual(multiplicities[1], 1)

    def test_roots_of_t_over_gf9(self):
        roots = roots_in_field(Poly.t(make_field(3, 2)), brute_force_bound=10 ** 6)
        self.assertEqual([(root.code, m) for root, m in roots], [(0, 1)])

    def test_order48_clauses_agree_with_multiplicative_order(self):
        ctx = make_quadratic_extension(7)
        for sigma in ctx.elements():
            if sigma.is_zero():
                continue
            gamma = -(sigma + sigma.inverse())
            self.assertEqual(order48_conditions(gamma).passed, not mult_order(sigma, 48).divides_bound, repr(sigma))
