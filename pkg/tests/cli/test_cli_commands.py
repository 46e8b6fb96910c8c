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
import csv
import io
import json
import logging
import unittest

from click.testing import CliRunner

from su23.cli.cli import main


class TestCLICommands(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self.runner = CliRunner()

    def test_gen_json(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(main, ['gen', '--n', '9', '--q', '2', '-o', 'gens.json'])
            assert result.exit_code == 0
            with open('gens.json') as f:
                document = json.load(f)
        assert document['n'] == 9
        assert document['q'] == 2
        assert document['a'] is None
        assert len(document['x']) == 9

    def test_gen_text(self):
        result = self.runner.invoke(main, ['gen', '--n', '12', '--q', '13', '--format', 'text'])
        assert result.exit_code == 0
        assert 'x =' in result.output
        assert 'J =' in result.output

    def test_gen_excluded_pair(self):
        result = self.runner.invoke(main, ['gen', '--n', '5', '--q', '2'])
        assert result.exit_code == 2

    def test_gen_bad_parameter(self):
        result = self.runner.invoke(main, ['gen', '--n', '12', '--q', '13', '--a', 'one,two'])
        assert result.exit_code == 2

    def test_gen_explicit_minimal_polynomial(self):
        result = self.runner.invoke(main, ['gen', '--n', '11', '--q', '3', '--a', 'poly:11,-1,1'])
        assert result.exit_code == 0

    def test_search(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(main, ['search', '--n', '12', '--q', '13', '-o', 'a.json'])
            assert result.exit_code == 0
            with open('a.json') as f:
                document = json.load(f)
        assert document['conditions']['passed']

    def test_verify_single_cell(self):
        result = self.runner.invoke(main, ['verify', '--n', '9', '--q', '2', '--suite', 'generator sanity'])
        assert result.exit_code == 0
        assert 'All checks passed' in result.output

    def test_verify_excluded_cell(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(main, ['verify', '--n', '4', '--q', '3', '--format', 'json',
                                               '-o', 'report.json'])
            assert result.exit_code == 0
            with open('report.json') as f:
                document = json.load(f)
        assert document['cells'][0]['status'] == 'excluded'
        assert 'timings' not in document['cells'][0]

    def test_verify_config_file(self):
        with self.runner.isolated_filesystem():
            with open('matrix.yml', 'w') as f:
                f.write('cells:\n  - n: 10\n    q: 2\nsuites:\n  - generator sanity\n')
            result = self.runner.invoke(main, ['verify', '--config', 'matrix.yml', '--format', 'csv'])
        assert result.exit_code == 0
        assert result.output.startswith('n,q,suite,check,status,claim')

    def test_verify_invalid_config_file(self):
        with self.runner.isolated_filesystem():
            with open('matrix.yml', 'w') as f:
                f.write('workers: 0\n')
            result = self.runner.invoke(main, ['verify', '--config', 'matrix.yml'])
        assert result.exit_code == 2

    def test_verify_needs_a_selection(self):
        result = self.runner.invoke(main, ['verify'])
        assert result.exit_code == 2

    def test_tables_csv(self):
        result = self.runner.invoke(main, ['tables', '--format', 'csv'])
        assert result.exit_code == 0
        rows = list(csv.reader(io.StringIO(result.output)))
        assert rows[0] == ['table', 'q', 'n', 'polynomial', 'word', 'exponents']
        assert ['commutator_word_exponents', '2', '8', '', '[x,y](xy)^j', '1 2 6 8'] in rows

    def test_tables_json(self):
        result = self.runner.invoke(main, ['tables', '--format', 'json'])
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document['small_q_words'][0]['exponents'] == [1, 6, 8, 15, 33]

    def test_field(self):
        result = self.runner.invoke(main, ['field', '--p', '3', '--d', '2'])
        assert result.exit_code == 0
        assert 'modulus: [1, 0, 1]' in result.output
        assert 'order: 9' in result.output

    def test_quiet_field(self):
        root_level = logging.getLogger().level
        try:
            result = self.runner.invoke(main, ['--quiet', 'field', '--p', '2', '--d', '2'])
            assert result.exit_code == 0
            assert 'order: 4' in result.output
            assert logging.getLogger().level == logging.WARNING
        finally:
            logging.getLogger().setLevel(root_level)

    def test_field_not_prime(self):
        result = self.runner.invoke(main, ['field', '--p', '4', '--d', '1'])
        assert result.exit_code == 2
