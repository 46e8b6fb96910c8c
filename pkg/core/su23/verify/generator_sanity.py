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

from su23.algebra.linalg import Mat, hermitian_invariant_form, invariant_factors, \
    minimal_polynomial, preserves_form
from su23.algebra.poly import Poly
from su23.gens.gen_case import REGIME_N11
from su23.gens.gen_triple import GenTriple
from su23.verify.check import CheckRecorder
from su23.verify.check_result import CheckResult

logger = logging.getLogger(__name__)

SUITE = 'generator sanity'

CLAIMS = {
    'hat_x_involution': '((-1)^n x)^2 = I',
    'y_order_three': 'y^3 = I',
    'x_unitary': 'x^T J x^psi = J',
    'y_unitary': 'y^T J y^psi = J',
    'form_hermitian': 'J^T = J^psi',
    'det_y': 'det(y) = 1',
    'det_x': 'det(x) = (-1)^n, and det(x) = 1 for the n = 11 replacement generators',
    'det_form': 'det(J) = -c^(n-3) gamma^2 when p != 3, and det(J) = -1 when p = 3',
    'gamma_from_b': 'gamma = -(a^q b + a b^q + 2c)',
    'x_invariant_factors': 'x has invariant factors t-1 (m-r times) and t^2-1 (m+r times)',
    'y_invariant_factors': 'y has invariant factors t-1 (r times) and t^3-1 (m times)',
    'n11_x_invariant_factors': 'x has invariant factors t+1 and t^2-1 (5 times)',
    'n11_y_invariant_factors': 'y has invariant factors t^2+t+1 (4 times) and t^3-1',
    'x_minimal_polynomial': 'the minimal polynomial of x is its last invariant factor',
    'y_minimal_polynomial': 'the minimal polynomial of y is its last invariant factor',
    'invariant_form_unique': 'the space of forms preserved by x and y is one-dimensional',
}


def _repeat(f: Poly, times: int) -> List[Poly]:
    return [f] * times


def _as_text(factors: List[Poly]) -> List[str]:
    return [repr(f) for f in factors]


def check_generator_sanity(tri: GenTriple) -> List[CheckResult]:
    checks = CheckRecorder(SUITE, CLAIMS)
    ctx, n, case = tri.ctx, tri.n, tri.case
    x, y, J = tri.x, tri.y, tri.J
    identity = Mat.identity(ctx, n)
    t = Poly.t(ctx)
    n11 = case.regime == REGIME_N11
    logger.debug(f'Generator sanity for {case}')

    checks.holds('hat_x_involution', (tri.hat_x * tri.hat_x).is_identity())
    checks.holds('y_order_three', (y * y * y) == identity)
    checks.holds('x_unitary', preserves_form(x, J))
    checks.holds('y_unitary', preserves_form(y, J))
    checks.holds('form_hermitian', J.T.psi() == J)
    checks.equal('det_y', y.det(), ctx.element(1))
    checks.equal('det_x', x.det(), ctx.elem(1 if n11 or n % 2 == 0 else -1))

    derived = tri.derived
    if derived is not None and not n11:
        if case.p == 3:
            checks.equal('det_form', J.det(), ctx.elem(-1))
        else:
            checks.equal('det_form', J.det(), -(derived.c ** (n - 3)) * derived.gamma ** 2)
            checks.equal('gamma_from_b', derived.gamma_from_b, derived.gamma)
    else:
        checks.skip('det_form', 'no closed form without a parameter' if derived is None
                    else 'the n = 11 form is solved for, not displayed')

    x_factors, y_factors = invariant_factors(x), invariant_factors(y)
    if n11:
        expected_x = [t + 1] + _repeat(t * t - 1, 5)
        expected_y = _repeat(t * t + t + 1, 4) + [t ** 3 - 1]
        checks.equal('n11_x_invariant_factors', _as_text(x_factors), _as_text(expected_x))
        checks.equal('n11_y_invariant_factors', _as_text(y_factors), _as_text(expected_y))
        _, dimension = hermitian_invariant_form([x, y])
        checks.equal('invariant_form_unique', dimension, 1)
    elif case.q > 2:
        m, r = case.m, case.r
        expected_x = _repeat(t - 1, m - r) + _repeat(t * t - 1, m + r)
        expected_y = _repeat(t - 1, r) + _repeat(t ** 3 - 1, m)
        checks.equal('x_invariant_factors', _as_text(x_factors), _as_text(expected_x))
        checks.equal('y_invariant_factors', _as_text(y_factors), _as_text(expected_y))
    else:
        checks.skip('x_invariant_factors', 'q = 2 uses a different arrangement of the fixed vectors')
        checks.skip('y_invariant_factors', 'q = 2 uses a different arrangement of the fixed vectors')

    checks.equal('x_minimal_polynomial', repr(minimal_polynomial(x)), repr(x_factors[-1]))
    checks.equal('y_minimal_polynomial', repr(minimal_polynomial(y)), repr(y_factors[-1]))
    return checks.results
