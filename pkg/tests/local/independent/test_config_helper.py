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
import os
import tempfile
from unittest import TestCase, mock

from su23.common.config_helper import ConfigHelper


class TestConfigHelper(TestCase):

    def setUp(self):
        ConfigHelper.reset()

    def tearDown(self):
        ConfigHelper.reset()

    def test_defaults(self):
        config = ConfigHelper.get_instance()
        self.assertEqual(config.budget_seconds, 600)
        self.assertEqual(config.enumeration_bound, 2 ** 24)
        self.assertIs(config, ConfigHelper.get_instance())

    @mock.patch.dict(os.environ, {'SU23_BUDGET_SECONDS': '42', 'SU23_SEED': '7'})
    def test_environment_overrides(self):
        config = ConfigHelper.get_instance()
        self.assertEqual(config.budget_seconds, 42)
        self.assertEqual(config.seed, 7)

    @mock.patch.dict(os.environ, {'SU23_BUDGET_SECONDS': 'soon'})
    def test_invalid_environment_value_is_ignored(self):
        self.assertEqual(ConfigHelper.get_instance().budget_seconds, 600)

    def test_config_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'config.yml')
            with open(path, 'w') as f:
                f.write('orbit_ceiling: 1000\nseed: 9\n')
            config = ConfigHelper.get_instance(path)
            self.assertEqual(config.orbit_ceiling, 1000)
            self.assertEqual(config.seed, 9)
            self.assertEqual(config.config_path, path)

    def test_singleton(self):
        ConfigHelper.get_instance()
        with self.assertRaises(Exception):
            ConfigHelper()
