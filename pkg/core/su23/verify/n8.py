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

from su23.algebra.linalg import Mat, charpoly, is_eigenvector, projectively_equal
from su23.algebra.poly import Poly, gcd
from su23.exceptions.exceptions import CaseNotApplicable
from su23.gens.builder import primitive_cube_root
from su23.gens.gen_case import REGIME_N8
from su23.gens.gen_triple import GenTriple
from su23.verify.check import CheckRecorder
from su23.verify.check_result import CheckResult
from su23.verify.displays import n8_chi1_at_one, n8_commutator_chi0, n8_psi, s_bar_omega, s_bar_one, s_omega, \
    s_one

logger = logging.getLogger(__name__)

SUITE = 'n = 8'

CLAIMS = {
    'charpoly_xy': 'the characteristic polynomial of xy is psi_1',
    'charpoly_xy_inverse': 'the characteristic polynomial of xy^-1 is psi_-1',
    'gamma_closed_form': 'gamma = (a^3+1)^2 / a^3',
    'commutator_charpoly': 'the characteristic polynomial of [x,y] is (t^2+t+1) chi_0(t)',
    'commutator_coprime': 'gcd(t^2+t+1, chi_0) = 1',
    'omega_eigenvector': 's_omega is an eigenvector of [x,y] for omega',
    'omega_transpose_eigenvector': 's-bar_omega is an eigenvector of [x,y]^T for omega',
    'x_swaps_omega': 'x s_omega is a multiple of s_{omega^-1}',
    'power_24': '[x,y]^24 != I, visible at entry (3,1)',
    'power_18': '[x,y]^18 != I, visible at entry (3,2)',
    'power_30': '[x,y]^30 != I, visible at entry (1,4) or (1,5)',
    'power_12': '[x,y]^12 != +-I, visible at entry (1,3)',
    'power_witness': 'the non-identity power shows at the named entry',
    'b_simple_eigenvalue': 'B = ([x,y]^2 y)^3 y has characteristic polynomial (t-1) chi_1 with chi_1(1) as displayed',
    'b_eigenvalue_one_simple': 'chi_1(1) != 0',
    's_one_eigenvector': 's_1 is an eigenvector of B for 1',
    's_bar_one_eigenvector': 's-bar_1 is an eigenvector of B^T for 1',
}

# exponent -> (check, 1-based entries expected to be nonzero, whether -I is excluded too)
POWER_WITNESSES = {
    24: ('power_24', ((3, 1),), False),
    18: ('power_18', ((3, 2),), False),
    30: ('power_30', ((1, 4), (1, 5)), False),
    12: ('power_12', ((1, 3),), True),
}


def _charpoly_check(checks: CheckRecorder, name: str, matrix: Mat, expected: Poly):
    actual = charpoly(matrix)
    mismatched = [i for i in range(max(actual.degree, expected.degree) + 1)
                  if actual.coefficient(i) != expected.coefficient(i)]
    checks.holds(name, not mismatched,
                 {'coefficient_indices': mismatched, 'actual': repr(actual), 'expected': repr(expected)}
                 if mismatched else None)


def _power_witnesses(tri: GenTriple, checks: CheckRecorder):
    ctx = tri.ctx
    commutator = tri.commutator()
    minus_one = ctx.from_int(-1)
    for exponent, (name, entries, not_minus) in POWER_WITNESSES.items():
        power = commutator ** exponent
        holds = not power.is_identity() and not (not_minus and power.is_scalar_value(minus_one))
        checks.holds(name, holds)
        shown = [entry for entry in entries if power.rows[entry[0] - 1][entry[1] - 1]]
        checks.finding('power_witness', bool(shown), {'exponent': exponent, 'entries': list(entries)})


def _generic(tri: GenTriple, checks: CheckRecorder):
    ctx, a = tri.ctx, tri.a
    x = tri.x
    t = Poly.t(ctx)
    derived = tri.derived
    checks.equal('gamma_closed_form', derived.gamma, (a ** 3 + 1) ** 2 / a ** 3)

    chi0 = n8_commutator_chi0(a)
    quadratic = t * t + t + 1
    commutator = tri.commutator()
    _charpoly_check(checks, 'commutator_charpoly', commutator, quadratic * chi0)
    checks.holds('commutator_coprime', gcd(quadratic, chi0).degree == 0)

    w = primitive_cube_root(ctx)
    s, s_inverse, s_bar = s_omega(a, w), s_omega(a, w * w), s_bar_omega(a, w)
    checks.finding('omega_eigenvector', is_eigenvector(commutator, s, w))
    checks.finding('omega_transpose_eigenvector', is_eigenvector(commutator.T, s_bar, w))
    checks.finding('x_swaps_omega', projectively_equal(ctx, x.apply(s), s_inverse))

    if ctx.p == tri.case.q and ctx.p % 4 == 3 and a * a == -1:
        _power_witnesses(tri, checks)


def _char_three(tri: GenTriple, checks: CheckRecorder):
    ctx, a = tri.ctx, tri.a
    y = tri.y
    t = Poly.t(ctx)
    commutator = tri.commutator()
    B = (commutator * commutator * y) ** 3 * y
    chi = charpoly(B)
    linear = t - 1
    if checks.holds('b_simple_eigenvalue', linear.divides(chi) and
                    chi.exact_div(linear).evaluate(1) == n8_chi1_at_one(a)):
        checks.holds('b_eigenvalue_one_simple', not chi.exact_div(linear).evaluate(1).is_zero())
    checks.finding('s_one_eigenvector', is_eigenvector(B, s_one(a), 1))
    checks.finding('s_bar_one_eigenvector', is_eigenvector(B.T, s_bar_one(a), 1))


def check_n8(tri: GenTriple) -> List[CheckResult]:
    if tri.case.regime != REGIME_N8:
        raise CaseNotApplicable(SUITE, f'regime {tri.case.regime}')
    checks = CheckRecorder(SUITE, CLAIMS)
    a = tri.a
    xy = tri.xy()
    _charpoly_check(checks, 'charpoly_xy', xy, n8_psi(a, 1))
    _charpoly_check(checks, 'charpoly_xy_inverse', tri.x * tri.y_inverse, n8_psi(a, -1))
    if tri.ctx.p == 3:
        _char_three(tri, checks)
    else:
        _generic(tri, checks)
    logger.debug(f'n = 8 checks for {tri.case} done')
    return checks.results
