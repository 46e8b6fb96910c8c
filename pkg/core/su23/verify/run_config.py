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
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from su23.gens.search import STRATEGY_HINTED

Cell = Tuple[int, int]

DEFAULT_DEGREES = tuple(range(8, 21))
DEFAULT_Q_VALUES = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27)


@dataclass
class RunConfig:
    cells: List[Cell] = field(default_factory=list)
    seed: Optional[int] = None
    budget_seconds: Optional[float] = None
    workers: int = 1
    strategy: str = STRATEGY_HINTED
    suites: Optional[List[str]] = None
    certify: List[Cell] = field(default_factory=list)
    counts: bool = False

    @staticmethod
    def default_matrix(**kwargs) -> 'RunConfig':
        """Every n in 8..20 against every q of the default list, with the field checks."""
        kwargs.setdefault('counts', True)
        return RunConfig(cells=[(n, q) for n in DEFAULT_DEGREES for q in DEFAULT_Q_VALUES], **kwargs)

    @property
    def q_values(self) -> List[int]:
        """Distinct q of the cells, in first-seen order."""
        return list(dict.fromkeys(q for _, q in self.cells))
