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
from su23.algebra.linalg import Mat
from su23.groupfacts.brute_force import enumerate_su, generated_group, small_generating_set
from su23.stabchain.stab_chain import REASON_TOO_LARGE, STATUS_CONFIRMED, certify_order


class TestStabChain(TestCase):

    def test_trivial_group(self):
        ctx = make_quadratic_extension(2)
        result = certify_order([Mat.identity(ctx, 3)], 1, budget_seconds=10, seed=1)
        self.assertEqual(result.status, STATUS_CONFIRMED)
        self.assertEqual(result.claimed_order, 1)

    def test_su3_of_4(self):
        ctx = make_quadratic_extension(2)
        gens = small_generating_set(enumerate_su(ctx, 3))
        self.assertEqual(len(generated_group(gens)), 216)
        result = certify_order(gens, 216, budget_seconds=120, seed=3)
        self.assertTrue(result.is_confirmed(), result.to_dict())
        self.assertEqual(result.claimed_order, 216)

    def test_wrong_expectation_is_not_confirmed(self):
        ctx = make_quadratic_extension(2)
        gens = small_generating_set(enumerate_su(ctx, 3))
        result = certify_order(gens, 108, budget_seconds=30, seed=3)
        self.assertFalse(result.is_confirmed())
        self.assertIsNotNone(result.reason)

    def test_orbit_ceiling(self):
        ctx = make_quadratic_extension(2)
        gens = small_generating_set(enumerate_su(ctx, 3))
        result = certify_order(gens, 216, budget_seconds=30, seed=3, orbit_ceiling=2)
        self.assertFalse(result.is_confirmed())
        self.assertEqual(result.reason, REASON_TOO_LARGE)

    def test_result_is_reproducible(self):
        ctx = make_quadratic_extension(2)
        gens = small_generating_set(enumerate_su(ctx, 3))
        first = certify_order(gens, 216, budget_seconds=120, seed=5).to_dict()
        second = certify_order(gens, 216, budget_seconds=120, seed=5).to_dict()
        first.pop('elapsed')
        second.pop('elapsed')
        self.assertEqual(first, second)
