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
import logging
from typing import List, Optional

from su23.common.parser import Parser
from su23.gens.search import STRATEGIES, STRATEGY_HINTED
from su23.verify.run_config import Cell, RunConfig
from su23.verify.verifier import SUITE_NAMES

KEY_CELLS = 'cells'
KEY_N = 'n'
KEY_Q = 'q'
KEY_SEED = 'seed'
KEY_BUDGET_SECONDS = 'budget_seconds'
KEY_WORKERS = 'workers'
KEY_STRATEGY = 'strategy'
KEY_SUITES = 'suites'
KEY_CERTIFY = 'certify'
KEY_COUNTS = 'counts'

VALID_RUN_CONFIG_KEYS = [KEY_CELLS, KEY_N, KEY_Q, KEY_SEED, KEY_BUDGET_SECONDS, KEY_WORKERS, KEY_STRATEGY,
                         KEY_SUITES, KEY_CERTIFY, KEY_COUNTS]
VALID_CELL_KEYS = [KEY_N, KEY_Q]

logger = logging.getLogger(__name__)


def read_run_config_file(run_config_file: str) -> RunConfig:
    parser = RunConfigParser.from_file(run_config_file)
    parser.log()
    parser.assert_no_errors()
    return parser.run_config


class RunConfigParser(Parser):
    """Reads a run matrix document: explicit cells plus an optional n x q grid, and the run options."""

    def __init__(self, run_config_dict: Optional[object], run_config_path: str = 'run-config-dict'):
        super().__init__(description=run_config_path)
        self.run_config = RunConfig()
        if run_config_dict is not None:
            self.parse(run_config_dict)

    @classmethod
    def from_file(cls, run_config_file: str) -> 'RunConfigParser':
        parser = cls(None, run_config_file)
        run_config_dict = parser.read_yaml_file(run_config_file)
        if run_config_dict is not None:
            parser.parse(run_config_dict)
        return parser

    def parse(self, run_config_dict: object):
        if not isinstance(run_config_dict, dict):
            self.error(f'Run config must be an object, but was {type(run_config_dict).__name__}')
            return
        config = self.run_config
        with self.scope('', run_config_dict):
            self.warn_unknown_keys(VALID_RUN_CONFIG_KEYS)
            config.cells = list(dict.fromkeys(self._parse_cells(KEY_CELLS) + self._parse_grid()))
            config.seed = self.get_int(KEY_SEED)
            config.budget_seconds = self.get_int(KEY_BUDGET_SECONDS, minimum=1)
            config.workers = self.get_int(KEY_WORKERS, default=1, minimum=1)
            config.strategy = self.get_choice(KEY_STRATEGY, STRATEGIES, STRATEGY_HINTED)
            config.suites = self.get_choice_list(KEY_SUITES, SUITE_NAMES)
            config.certify = self._parse_cells(KEY_CERTIFY)
            config.counts = self.get_bool(KEY_COUNTS, False)

    def _parse_grid(self) -> List[Cell]:
        n_values = self.get_int_list(KEY_N)
        q_values = self.get_int_list(KEY_Q)
        if bool(n_values) != bool(q_values):
            self.error(f'{KEY_N} and {KEY_Q} must be given together', KEY_Q if n_values else KEY_N)
        return [(n, q) for n in n_values for q in q_values]

    def _parse_cells(self, key: str) -> List[Cell]:
        cells: List[Cell] = []
        for name, cell_dict in self.get_object_list(key):
            with self.scope(name, cell_dict):
                self.warn_unknown_keys(VALID_CELL_KEYS)
                n = self.get_int(KEY_N, required=True)
                q = self.get_int(KEY_Q, required=True)
            if n is not None and q is not None:
                cells.append((n, q))
        return cells
