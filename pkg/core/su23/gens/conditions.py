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
from dataclasses import dataclass, field
from typing import List, Optional

from su23.algebra.ff import FFElem
from su23.algebra.poly import Poly, order48_clauses
from su23.gens.gen_case import GenCase, REGIME_CHAR_THREE, REGIME_N11, REGIME_N8, REGIME_NORM_THREE, \
    REGIME_PARAMETER_FREE, REGIME_SMALL_Q
from su23.gens.param_derived import ParamDerived, f1, f2
from su23.gens.tables import CHAR_THREE_POLYNOMIALS, SMALL_Q_WORDS, format_coefficients

logger = logging.getLogger(__name__)


@dataclass
class ConditionClause:
    name: str
    passed: bool
    detail: Optional[str] = None

    def to_dict(self) -> dict:
        result = {'name': self.name, 'passed': self.passed}
        if self.detail:
            result['detail'] = self.detail
        return result


@dataclass
class ConditionReport:
    case: GenCase
    a: Optional[FFElem]
    clauses: List[ConditionClause] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: Optional[str] = None):
        self.clauses.append(ConditionClause(name, bool(passed), detail))

    def is_passed(self) -> bool:
        return all(clause.passed for clause in self.clauses)

    def failed_clauses(self) -> List[str]:
        return [clause.name for clause in self.clauses if not clause.passed]

    def to_dict(self) -> dict:
        return {
            'case': self.case.to_dict(),
            'a': self.a.to_jsonnable() if self.a is not None else None,
            'passed': self.is_passed(),
            'clauses': [clause.to_dict() for clause in self.clauses]
        }


def _root_of(a: FFElem, coefficients) -> bool:
    return Poly.from_ints(a.ctx, coefficients).evaluate(a).is_zero()


def _add_base_clauses(report: ConditionReport, a: FFElem):
    """Clauses shared by every regime that takes a parameter."""
    q = report.case.q
    if report.case.p == 3:
        report.add('GF(3)[a] = GF(q^2)', a.generates_field())
        report.add('a^q + a^(q-1) + 1 = 0', (a ** q + a ** (q - 1) + 1).is_zero())
        return
    derived = ParamDerived.from_a(a)
    report.add('GF(p)[a^3] = GF(q^2)', (a ** 3).generates_field())
    report.add('c = a^(q+1) - 4 != 0', not derived.c.is_zero())
    report.add('gamma != 0', not derived.gamma.is_zero())


def _add_norm_three_clauses(report: ConditionReport, a: FFElem):
    derived = ParamDerived.from_a(a)
    report.add('a^(q+1) = 3', derived.norm == 3)
    for name, value in order48_clauses(derived.gamma):
        report.add(name, not value.is_zero())
    report.add('b + ac != 0', not derived.trace_hypothesis.is_zero())


def _add_n8_clauses(report: ConditionReport, a: FFElem):
    case = report.case
    if case.p == 3:
        return
    report.add('a^(q+1) = 1', a.norm() == 1)
    quartic = 4 * a ** 4 - 11 * a ** 3 + 24 * a ** 2 - 11 * a + 4
    report.add('4a^4 - 11a^3 + 24a^2 - 11a + 4 != 0', not quartic.is_zero())
    if case.f == 1 and case.p % 4 == 3:
        report.add('a^2 = -1', a * a == -1, 'a must be a primitive fourth root of unity when q = p = 3 mod 4')


def _add_n11_clauses(report: ConditionReport, a: FFElem):
    report.add('GF(p)[a] = GF(q^2)', a.generates_field())
    report.add('f1(a) != 0', not f1(a).is_zero())
    report.add('f2(a) != 0', not f2(a).is_zero())


def check_conditions(case: GenCase, a: Optional[FFElem]) -> ConditionReport:
    """Evaluate every clause the case requires of a, itemized."""
    report = ConditionReport(case=case, a=a)
    regime = case.regime
    if regime == REGIME_PARAMETER_FREE:
        return report
    if a is None:
        report.add('parameter supplied', False, f'{case} needs a parameter a in GF({case.q}^2)')
        return report
    if regime == REGIME_N11:
        _add_n11_clauses(report, a)
        return report

    _add_base_clauses(report, a)
    if regime == REGIME_NORM_THREE:
        _add_norm_three_clauses(report, a)
    elif regime == REGIME_CHAR_THREE:
        if case.q in CHAR_THREE_POLYNOMIALS:
            coefficients = CHAR_THREE_POLYNOMIALS[case.q]
            report.add(f'{format_coefficients(coefficients)} = 0', _root_of(a, coefficients))
    elif regime == REGIME_SMALL_Q:
        coefficients = SMALL_Q_WORDS[case.q].minimal_polynomial
        report.add(f'a is a root of {format_coefficients(coefficients)}', _root_of(a, coefficients))
    elif regime == REGIME_N8:
        _add_n8_clauses(report, a)

    if not report.is_passed():
        logger.debug(f'{case}: a={a} fails {", ".join(report.failed_clauses())}')
    return report
