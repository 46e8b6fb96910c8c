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
from typing import List

from su23.gens.gen_triple import GenTriple
from su23.gens.trace_recovery import SUITE, recover
from su23.verify.check import CheckRecorder
from su23.verify.check_result import CheckResult

CLAIMS = {
    'recovers_a': 'a is a rational function of the traces of short words in x and y',
}


def check_trace_recovery(tri: GenTriple) -> List[CheckResult]:
    checks = CheckRecorder(SUITE, CLAIMS)
    recovery = recover(tri)
    checks.holds('recovers_a', recovery.matches, recovery.to_dict())
    return checks.results
