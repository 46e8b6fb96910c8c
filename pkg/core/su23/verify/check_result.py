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
import json
from dataclasses import dataclass
from typing import Optional

from su23.common.json_helper import JsonHelper

STATUS_PASSED = 'passed'
STATUS_FAILED = 'failed'
STATUS_FINDING = 'finding'
STATUS_SKIPPED = 'skipped'


@dataclass
class CheckResult:
    suite: str
    name: str
    claim: str
    status: str
    witness: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.status != STATUS_FAILED

    @property
    def failed(self) -> bool:
        return self.status == STATUS_FAILED

    def __str__(self):
        return (f'Check {self.suite}/{self.name} {self.status}'
                + (f' with witness {json.dumps(JsonHelper.to_jsonnable(self.witness), sort_keys=True)}'
                   if self.witness else ''))

    def to_dict(self) -> dict:
        result = {
            'suite': self.suite,
            'name': self.name,
            'claim': self.claim,
            'status': self.status,
        }
        if self.witness:
            result['witness'] = JsonHelper.to_jsonnable(self.witness)
        return result
