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
from su23.common.json_helper import JsonHelper
from su23.groupfacts.group_order import su_order


class TestJsonHelper(TestCase):

    def test_jsonize_small_int(self):
        self.assertEqual(JsonHelper.to_jsonnable(216), 216)

    def test_jsonize_big_int(self):
        order = su_order(20, 27).order
        self.assertEqual(JsonHelper.to_jsonnable(order), str(order))

    def test_jsonize_set_sorted(self):
        self.assertEqual(JsonHelper.to_jsonnable({5, 2, 3}), [2, 3, 5])

    def test_jsonize_field_element(self):
        ctx = make_quadratic_extension(3)
        self.assertEqual(JsonHelper.to_jsonnable(ctx.generator_t()), [0, 1])

    def test_jsonize_matrix(self):
        ctx = make_quadratic_extension(2)
        self.assertEqual(JsonHelper.to_jsonnable(Mat.identity(ctx, 2)), [[[1, 0], [0, 0]], [[0, 0], [1, 0]]])

    def test_jsonize_to_dict(self):
        self.assertEqual(JsonHelper.to_jsonnable(su_order(3, 2))['order'], '216')

    def test_unknown_type(self):
        with self.assertRaises(RuntimeError):
            JsonHelper.to_jsonnable(object())
