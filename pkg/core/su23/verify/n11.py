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
from typing import List

from su23.algebra.integers import euler_phi
from su23.algebra.linalg import charpoly
from su23.exceptions.exceptions import CaseNotApplicable
from su23.gens.gen_case import REGIME_N11
from su23.gens.gen_triple import GenTriple
from su23.gens.param_derived import f2
from su23.verify.check import CheckRecorder
from su23.verify.check_result import CheckResult
from su23.verify.displays import n11_charpoly_xy

logger = logging.getLogger(__name__)

SUITE = 'n = 11'

CLAIMS = {
    'charpoly_xy': 'the characteristic polynomial of xy is chi_z',
    'trace_power': 'tr((xy)^9) = -9a when p != 3, tr((xy)^5) = -(a+1) when p = 3',
    'xy_sixth_nonscalar': '(xy)^6 is not scalar: its entry (5,1) is 1',
    'trace_x': 'tr(x) = -1',
    'trace_y': 'tr(y) = -4',
    'f2_char_two': 'f2(a) = (a + a^q)^5 when p = 2',
    'search_bound': 'phi(q^2 - 1) > 7q, so an exhaustive search meets an admissible parameter',
}

SEARCH_BOUND_Q = (16, 25, 27)


def search_bound_applies(q: int) -> bool:
    return q in SEARCH_BOUND_Q or q >= 31


def check_n11(tri: GenTriple) -> List[CheckResult]:
    if tri.case.regime != REGIME_N11:
        raise CaseNotApplicable(SUITE, f'regime {tri.case.regime}')
    checks = CheckRecorder(SUITE, CLAIMS)
    ctx, a, q = tri.ctx, tri.a, tri.case.q
    xy = tri.xy()

    actual = charpoly(xy)
    checks.equal('charpoly_xy', repr(actual), repr(n11_charpoly_xy(a)))
    if ctx.p == 3:
        checks.equal('trace_power', (xy ** 5).trace(), -(a + 1))
    else:
        checks.equal('trace_power', (xy ** 9).trace(), -9 * a)
    sixth = xy ** 6
    checks.holds('xy_sixth_nonscalar', not sixth.is_scalar() and sixth.rows[4][0] == 1)
    checks.equal('trace_x', tri.x.trace(), ctx.elem(-1))
    checks.equal('trace_y', tri.y.trace(), ctx.elem(-4))
    if ctx.p == 2:
        checks.equal('f2_char_two', f2(a), (a + a.frobenius_q()) ** 5)
    if search_bound_applies(q):
        phi = euler_phi(q * q - 1)
        checks.holds('search_bound', phi > 7 * q, {'phi': phi, 'bound': 7 * q})
    else:
        checks.skip('search_bound', f'q={q} is covered by the published parameters')
    logger.debug(f'n = 11 checks for {tri.case} done')
    return checks.results
