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
"""Recording of named checks.

Every suite declares its checks up front as a name -> claim mapping, so a check name always stands for the
same mathematical statement. The recorder refuses names the suite did not declare.
"""
import logging
from typing import Dict, List, Optional

from su23.common.json_helper import JsonHelper
from su23.verify.check_result import CheckResult, STATUS_FAILED, STATUS_FINDING, STATUS_PASSED, \
    STATUS_SKIPPED

logger = logging.getLogger(__name__)


class CheckRecorder:

    def __init__(self, suite: str, claims: Dict[str, str]):
        self.suite = suite
        self.claims = claims
        self.results: List[CheckResult] = []

    def _record(self, name: str, status: str, witness: Optional[dict]) -> CheckResult:
        if name not in self.claims:
            raise KeyError(f'Check {name} is not declared by suite {self.suite}')
        result = CheckResult(suite=self.suite, name=name, claim=self.claims[name], status=status,
                             witness=JsonHelper.to_jsonnable(witness) if witness else None)
        if status == STATUS_FAILED:
            logger.warning(str(result))
        else:
            logger.debug(str(result))
        self.results.append(result)
        return result

    def holds(self, name: str, condition: bool, witness: Optional[dict] = None) -> bool:
        self._record(name, STATUS_PASSED if condition else STATUS_FAILED, witness)
        return bool(condition)

    def equal(self, name: str, actual, expected, witness: Optional[dict] = None) -> bool:
        passed = actual == expected
        details = dict(witness or {})
        if not passed:
            details.update({'actual': actual, 'expected': expected})
        return self.holds(name, passed, details or None)

    def finding(self, name: str, condition: bool, witness: Optional[dict] = None) -> bool:
        """Like holds, but a violation is reported as a finding and does not fail the cell."""
        self._record(name, STATUS_PASSED if condition else STATUS_FINDING, witness)
        return bool(condition)

    def skip(self, name: str, reason: str):
        self._record(name, STATUS_SKIPPED, {'reason': reason})
