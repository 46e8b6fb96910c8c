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
from typing import Dict, List, Optional

from su23.stabchain.stab_chain import CertifyResult, REASON_MISMATCH
from su23.verify.check_result import CheckResult, STATUS_FINDING
from su23.verify.verify_error import VerifyError

CELL_PASSED = 'passed'
CELL_FAILED = 'failed'
CELL_EXCLUDED = 'excluded'
CELL_UNSUPPORTED = 'unsupported'


class VerifyReport:
    """Outcome of every suite on one (n, q) cell."""

    def __init__(self, n: int, q: int):
        self.n = n
        self.q = q
        self.case: Optional[dict] = None
        self.a = None
        self.reason: Optional[str] = None
        self.excluded = False
        self.unsupported = False
        self.check_results: List[CheckResult] = []
        self.errors: List[VerifyError] = []
        # suite -> reason
        self.skipped_suites: Dict[str, str] = {}
        # suite -> seconds
        self.timings: Dict[str, float] = {}
        self.elapsed: float = 0.0

    def add_error(self, error: VerifyError):
        self.errors.append(error)

    def add_check_results(self, check_results: List[CheckResult]):
        self.check_results.extend(check_results)

    def get_check_failures(self) -> List[CheckResult]:
        return [check_result for check_result in self.check_results if check_result.failed]

    def get_findings(self) -> List[CheckResult]:
        return [check_result for check_result in self.check_results if check_result.status == STATUS_FINDING]

    def has_check_failures(self) -> bool:
        return len(self.get_check_failures()) > 0

    def has_errors(self) -> bool:
        return len(self.errors) > 0

    @property
    def status(self) -> str:
        if self.excluded:
            return CELL_EXCLUDED
        if self.unsupported:
            return CELL_UNSUPPORTED
        return CELL_FAILED if self.has_check_failures() or self.has_errors() else CELL_PASSED

    def is_passed(self) -> bool:
        return self.status != CELL_FAILED

    def detached(self) -> 'VerifyReport':
        self.errors = [error.detached() for error in self.errors]
        return self

    def to_dict(self, include_timings: bool = False) -> dict:
        result = {
            'n': self.n,
            'q': self.q,
            'status': self.status,
            'case': self.case,
            'a': self.a,
            'checkResults': [check_result.to_dict() for check_result in self.check_results],
            'skippedSuites': dict(self.skipped_suites),
            'errors': [error.to_dict() for error in self.errors]
        }
        if self.reason:
            result['reason'] = self.reason
        if include_timings:
            result['timings'] = {suite: round(seconds, 3) for suite, seconds in self.timings.items()}
            result['elapsedSeconds'] = round(self.elapsed, 3)
        return result


@dataclass
class FieldReport:
    """Checks that depend on q only."""
    q: int
    check_results: List[CheckResult] = field(default_factory=list)
    errors: List[VerifyError] = field(default_factory=list)
    skipped: Optional[str] = None

    def is_passed(self) -> bool:
        return not self.errors and not any(check_result.failed for check_result in self.check_results)

    def detached(self) -> 'FieldReport':
        self.errors = [error.detached() for error in self.errors]
        return self

    def to_dict(self) -> dict:
        result = {
            'q': self.q,
            'passed': self.is_passed(),
            'checkResults': [check_result.to_dict() for check_result in self.check_results],
            'errors': [error.to_dict() for error in self.errors]
        }
        if self.skipped:
            result['skipped'] = self.skipped
        return result


@dataclass
class CertifyReport:
    """A stabilizer chain run on one cell; an unconfirmed order is reported, a contradicting one fails."""
    n: int
    q: int
    result: Optional[CertifyResult] = None
    errors: List[VerifyError] = field(default_factory=list)

    def is_passed(self) -> bool:
        return not self.errors and self.result is not None and self.result.reason != REASON_MISMATCH

    def detached(self) -> 'CertifyReport':
        self.errors = [error.detached() for error in self.errors]
        return self

    def to_dict(self, include_timings: bool = False) -> dict:
        result = self.result.to_dict() if self.result else None
        if result is not None and not include_timings:
            result.pop('elapsed')
        return {
            'n': self.n,
            'q': self.q,
            'passed': self.is_passed(),
            'result': result,
            'errors': [error.to_dict() for error in self.errors]
        }


@dataclass
class MatrixReport:
    """Everything run_matrix produced, in request order."""
    cells: List[VerifyReport] = field(default_factory=list)
    fields: List[FieldReport] = field(default_factory=list)
    certifications: List[CertifyReport] = field(default_factory=list)
    elapsed: float = 0.0

    def is_empty(self) -> bool:
        return not (self.cells or self.fields or self.certifications)

    def failed_cells(self) -> List[VerifyReport]:
        return [cell for cell in self.cells if not cell.is_passed()]

    def is_passed(self) -> bool:
        return (not self.failed_cells()
                and all(field_report.is_passed() for field_report in self.fields)
                and all(certification.is_passed() for certification in self.certifications))

    def counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for cell in self.cells:
            counts[cell.status] = counts.get(cell.status, 0) + 1
        return counts

    def to_dict(self, include_timings: bool = False) -> dict:
        result = {
            'passed': self.is_passed(),
            'cellCounts': self.counts(),
            'cells': [cell.to_dict(include_timings) for cell in self.cells],
            'fields': [field_report.to_dict() for field_report in self.fields],
            'certifications': [certification.to_dict(include_timings) for certification in self.certifications]
        }
        if include_timings:
            result['elapsedSeconds'] = round(self.elapsed, 3)
        return result
