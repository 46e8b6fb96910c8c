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
from unittest import TestCase

from su23.exceptions.exceptions import InvalidRunConfig
from su23.verify.run_config import DEFAULT_DEGREES, DEFAULT_Q_VALUES, RunConfig
from su23.verify.run_config_parser import RunConfigParser, read_run_config_file


class TestRunConfigParser(TestCase):

    def test_cells_and_grid(self):
        parser = RunConfigParser({
            'cells': [{'n': 8, 'q': 2}],
            'n': [9, 10],
            'q': [3],
            'seed': 4,
            'certify': [{'n': 8, 'q': 2}],
            'counts': True
        })
        self.assertFalse(parser.has_errors())
        config = parser.run_config
        self.assertEqual(config.cells, [(8, 2), (9, 3), (10, 3)])
        self.assertEqual(config.seed, 4)
        self.assertEqual(config.certify, [(8, 2)])
        self.assertTrue(config.counts)
        self.assertEqual(config.q_values, [2, 3])

    def test_duplicate_cells_are_dropped(self):
        parser = RunConfigParser({'cells': [{'n': 9, 'q': 3}], 'n': [9], 'q': [3]})
        self.assertEqual(parser.run_config.cells, [(9, 3)])

    def test_n_without_q(self):
        self.assertTrue(RunConfigParser({'n': [9]}).has_errors())

    def test_invalid_values(self):
        self.assertTrue(RunConfigParser({'workers': 0}).has_errors())
        self.assertTrue(RunConfigParser({'budget_seconds': -1}).has_errors())
        self.assertTrue(RunConfigParser({'strategy': 'guess'}).has_errors())
        self.assertTrue(RunConfigParser({'suites': ['no such suite']}).has_errors())

    def test_invalid_key_is_a_warning(self):
        parser = RunConfigParser({'cells': [{'n': 9, 'q': 3}], 'colour': 'blue'})
        self.assertFalse(parser.has_errors())
        self.assertTrue(parser.has_warnings_or_errors())

    def test_cell_without_q(self):
        self.assertTrue(RunConfigParser({'cells': [{'n': 9}]}).has_errors())

    def test_empty_document(self):
        parser = RunConfigParser(None)
        self.assertFalse(parser.has_errors())
        self.assertEqual(parser.run_config.cells, [])

    def test_read_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'matrix.yml')
            with open(path, 'w') as f:
                f.write('n: [12]\nq: [13, 16]\nsuites:\n  - generator sanity\n')
            config = read_run_config_file(path)
            self.assertEqual(config.cells, [(12, 13), (12, 16)])
            self.assertEqual(config.suites, ['generator sanity'])

    def test_read_invalid_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'matrix.yml')
            with open(path, 'w') as f:
                f.write('workers: 0\n')
            with self.assertRaises(InvalidRunConfig):
                read_run_config_file(path)

    def test_default_matrix(self):
        config = RunConfig.default_matrix()
        self.assertEqual(len(config.cells), len(DEFAULT_DEGREES) * len(DEFAULT_Q_VALUES))
        self.assertTrue(config.counts)

    def test_errors_are_located(self):
        parser = RunConfigParser({'certify': [{'n': 8, 'q': 2}, {'n': 9, 'q': 'three'}], 'n': [8, 'x'], 'q': [2]})
        paths = [log.path for log in parser.logs if log.is_error()]
        self.assertIn('certify[1].q', paths)
        self.assertIn('n[1]', paths)
        self.assertEqual(parser.run_config.certify, [(8, 2)])

    def test_non_mapping_cell_entry(self):
        parser = RunConfigParser({'cells': [[9, 3], {'n': 10, 'q': 3}]})
        self.assertEqual([log.path for log in parser.logs], ['cells[0]'])
        self.assertEqual(parser.run_config.cells, [(10, 3)])

    def test_non_mapping_document(self):
        parser = RunConfigParser(['n', 'q'])
        self.assertTrue(parser.has_errors())

    def test_unknown_suite_is_dropped(self):
        parser = RunConfigParser({'suites': ['generator sanity', 'no such suite']})
        self.assertEqual(parser.run_config.suites, ['generator sanity'])
        self.assertEqual([log.path for log in parser.logs], ['suites[1]'])

    def test_unreadable_yaml(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'matrix.yml')
            with open(path, 'w') as f:
                f.write('n: [8\n')
            parser = RunConfigParser.from_file(path)
            self.assertTrue(parser.has_errors())
            self.assertIn("Couldn't parse yaml", str(parser))
