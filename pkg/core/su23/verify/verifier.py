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
import time
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence

from su23.exceptions.exceptions import CaseNotApplicable, UnsupportedCase
from su23.gens.builder import build_generators
from su23.gens.gen_case import GenCase, is_excluded_by_theorem
from su23.gens.gen_triple import GenTriple
from su23.gens.search import STRATEGY_HINTED, parse_parameter
from su23.verify import commutator, generator_sanity, irreducibility, n11, n8, small_q, spectral, trace_suite
from su23.verify.check_result import CheckResult
from su23.verify.verify_error import ConstructionVerifyError, SuiteExecutionVerifyError
from su23.verify.verify_report import VerifyReport

logger = logging.getLogger(__name__)

Suite = Callable[[GenTriple], List[CheckResult]]


def suite_registry(seed: Optional[int] = None) -> Dict[str, Suite]:
    """Suites in execution order."""
    return {
        generator_sanity.SUITE: generator_sanity.check_generator_sanity,
        trace_suite.SUITE: trace_suite.check_trace_recovery,
        commutator.SUITE: commutator.check_commutator_action,
        spectral.SUITE: spectral.check_spectral_structure,
        irreducibility.SUITE: partial(irreducibility.check_irreducibility, seed=seed),
        small_q.SUITE: small_q.check_small_q_certificates,
        n8.SUITE: n8.check_n8,
        n11.SUITE: n11.check_n11,
    }


SUITE_NAMES = tuple(suite_registry())


class Verifier:

    def __init__(self,
                 n: int,
                 q: int,
                 parameter: Optional[str] = None,
                 strategy: str = STRATEGY_HINTED,
                 suites: Optional[Sequence[str]] = None,
                 seed: Optional[int] = None):
        self.n = n
        self.q = q
        self.parameter = parameter
        self.strategy = strategy
        self.suites = list(suites) if suites else None
        self.seed = seed
        self.report = VerifyReport(n, q)
        self.triple: Optional[GenTriple] = None

    def execute(self) -> VerifyReport:
        start = time.monotonic()
        try:
            self.triple = self._construct()
        except UnsupportedCase as e:
            if is_excluded_by_theorem(self.n, self.q):
                self.report.excluded = True
            else:
                self.report.unsupported = True
            self.report.reason = str(e)
            logger.info(f'Cell (n={self.n}, q={self.q}) {self.report.status}: {self.report.reason}')
        except Exception as e:
            logger.exception(f'Exception during construction of (n={self.n}, q={self.q})')
            self.report.add_error(ConstructionVerifyError('Exception during construction', e))

        if self.triple is not None:
            for name, suite in suite_registry(self.seed).items():
                if self.suites is not None and name not in self.suites:
                    continue
                self._run_suite(name, suite)

        self.report.elapsed = time.monotonic() - start
        logger.debug(f'Verified (n={self.n}, q={self.q}) in {self.report.elapsed:.2f}s: {self.report.status}')
        return self.report

    def _construct(self) -> GenTriple:
        case = GenCase.for_cell(self.n, self.q)
        self.report.case = case.to_dict()
        a = parse_parameter(case, self.parameter, self.strategy)
        triple = build_generators(case, a)
        self.report.a = triple.a.to_jsonnable() if triple.a is not None else None
        return triple

    def _run_suite(self, name: str, suite: Suite):
        logger.info(f'Running {name} on {self.triple.case}')
        start = time.monotonic()
        try:
            self.report.add_check_results(suite(self.triple))
        except CaseNotApplicable as e:
            self.report.skipped_suites[name] = e.reason
        except Exception as e:
            logger.exception(f'Exception during {name}')
            self.report.add_error(SuiteExecutionVerifyError(f'Exception during {name}', e, suite=name))
        finally:
            self.report.timings[name] = time.monotonic() - start
