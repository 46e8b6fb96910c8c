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
from typing import Dict

from su23.algebra.ff import FFElem
from su23.exceptions.exceptions import CaseNotApplicable, TraceDenominatorZero
from su23.gens.gen_case import REGIME_N11, REGIME_N8
from su23.gens.gen_triple import GenTriple
from su23.gens.param_derived import ParamDerived

SUITE = 'trace recovery'


@dataclass
class TraceRecovery:
    """The value recovered from traces of words in x and y, with the traces it was computed from."""
    value: FFElem
    expected: FFElem
    formula: str
    traces: Dict[str, FFElem] = field(default_factory=dict)

    @property
    def matches(self) -> bool:
        return self.value == self.expected

    def to_dict(self) -> dict:
        return {
            'formula': self.formula,
            'value': self.value.to_jsonnable(),
            'expected': self.expected.to_jsonnable(),
            'traces': {name: value.to_jsonnable() for name, value in self.traces.items()}
        }


def _nonzero(name: str, value: FFElem) -> FFElem:
    if value.is_zero():
        raise TraceDenominatorZero(name)
    return value


def recover(tri: GenTriple) -> TraceRecovery:
    case = tri.case
    if tri.a is None:
        raise CaseNotApplicable(SUITE, 'q = 2 has no parameter')
    a = tri.a
    x, y = tri.x, tri.y
    xy = x * y

    if case.regime == REGIME_N11:
        if case.p == 3:
            t5 = (xy ** 5).trace()
            return TraceRecovery(-t5 - 1, a, '-tr((xy)^5) - 1', {'tr((xy)^5)': t5})
        t9 = (xy ** 9).trace()
        return TraceRecovery(-t9 / 9, a, '-tr((xy)^9) / 9', {'tr((xy)^9)': t9})

    if case.regime == REGIME_N8:
        if case.p == 3:
            t_xy, t_xy2 = xy.trace(), (xy * y).trace()
            return TraceRecovery(-t_xy / _nonzero('tr(xy^2)', t_xy2) - 1, a, '-tr(xy) / tr(xy^2) - 1',
                                 {'tr(xy)': t_xy, 'tr(xy^2)': t_xy2})
        yxy = y * xy
        t_xy, t_yxy = xy.trace(), yxy.trace()
        return TraceRecovery(t_yxy / _nonzero('tr(xy)', t_xy), a, 'tr(yxy) / tr(xy)',
                             {'tr(xy)': t_xy, 'tr(yxy)': t_yxy})

    if case.p == 3:
        t_xy = xy.trace()
        return TraceRecovery(t_xy, a, 'tr(xy)', {'tr(xy)': t_xy})
    if ParamDerived.from_a(a).trace_hypothesis.is_zero():
        raise CaseNotApplicable(SUITE, 'b + ac vanishes')
    yxy = y * xy
    yxy2 = yxy * yxy
    t_xy, t_yxy, t_yxy2, t_yxy3 = xy.trace(), yxy.trace(), yxy2.trace(), (yxy2 * yxy).trace()
    value = t_xy + t_yxy2 - t_yxy3 / _nonzero('tr(yxy)', t_yxy)
    return TraceRecovery(value, a, 'tr(xy) + tr((yxy)^2) - tr((yxy)^3) / tr(yxy)',
                         {'tr(xy)': t_xy, 'tr(yxy)': t_yxy, 'tr((yxy)^2)': t_yxy2, 'tr((yxy)^3)': t_yxy3})


def trace_recover_a(tri: GenTriple) -> FFElem:
    """a, read back from traces of short words in x and y."""
    return recover(tri).value
