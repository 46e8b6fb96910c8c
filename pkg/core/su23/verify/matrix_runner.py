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
"""run_matrix: every requested cell, the per-q field checks and the stabilizer chain certifications."""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from su23.gens.builder import build_generators
from su23.gens.gen_case import GenCase
from su23.gens.search import STRATEGY_HINTED, search_parameter
from su23.groupfacts.group_order import su_order
from su23.stabchain.stab_chain import certify_order
from su23.verify.field_counts import check_field_counts
from su23.verify.run_config import RunConfig
from su23.verify.verifier import Verifier
from su23.verify.verify_error import ConstructionVerifyError, SuiteExecutionVerifyError
from su23.verify.verify_report import CertifyReport, FieldReport, MatrixReport, VerifyReport

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def verify_cell(n: int, q: int, parameter: Optional[str] = None, strategy: str = STRATEGY_HINTED,
                suites: Optional[Sequence[str]] = None, seed: Optional[int] = None) -> VerifyReport:
    return Verifier(n, q, parameter=parameter, strategy=strategy, suites=suites, seed=seed).execute().detached()


def verify_field(q: int) -> FieldReport:
    report = FieldReport(q)
    try:
        report.check_results = check_field_counts(q)
    except Exception as e:
        logger.exception(f'Exception during field counts for q={q}')
        report.errors.append(SuiteExecutionVerifyError('Exception during field counts', e, suite='field counts'))
    return report.detached()


def certify_cell(n: int, q: int, budget_seconds: Optional[float] = None, seed: Optional[int] = None,
                 strategy: str = STRATEGY_HINTED) -> CertifyReport:
    """Certifies |<(-1)^n x, y>| = |SU_n(q^2)| with a stabilizer chain."""
    report = CertifyReport(n, q)
    try:
        case = GenCase.for_cell(n, q)
        triple = build_generators(case, search_parameter(case, strategy))
        logger.info(f'Certifying the order of <x,y> for {case}')
        report.result = certify_order([triple.hat_x, triple.y], su_order(n, q).order,
                                      budget_seconds=budget_seconds, seed=seed)
        logger.info(f'Certification of {case}: {report.result.status}'
                    + (f' ({report.result.reason})' if report.result.reason else ''))
    except Exception as e:
        logger.exception(f'Exception during certification of (n={n}, q={q})')
        report.errors.append(ConstructionVerifyError('Exception during certification', e))
    return report.detached()


def _verify_cell_args(args: tuple) -> VerifyReport:
    return verify_cell(*args)


def _certify_cell_args(args: tuple) -> CertifyReport:
    return certify_cell(*args)


def _map(function: Callable[[T], R], items: List[T], workers: int) -> List[R]:
    if workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, items))


def run_matrix(config: RunConfig) -> MatrixReport:
    start = time.monotonic()
    report = MatrixReport()
    cell_args = [(n, q, None, config.strategy, config.suites, config.seed) for n, q in config.cells]
    report.cells = _map(_verify_cell_args, cell_args, config.workers)
    if config.counts:
        report.fields = _map(verify_field, config.q_values, config.workers)
    certify_args = [(n, q, config.budget_seconds, config.seed, config.strategy) for n, q in config.certify]
    report.certifications = _map(_certify_cell_args, certify_args, config.workers)
    report.elapsed = time.monotonic() - start
    logger.info(f'Verified {len(report.cells)} cells in {report.elapsed:.1f}s: {report.counts()}')
    return report
