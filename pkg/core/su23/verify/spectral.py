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

from su23.algebra.linalg import Mat, add_vectors, fixed_space_rank_defect, is_eigenvector, minimal_polynomial, \
    projectively_equal, scale_vector, span_contains, unit_vector
from su23.algebra.poly import gcd
from su23.exceptions.exceptions import CaseNotApplicable
from su23.gens.gen_case import REGIME_CHAR_THREE, REGIME_NORM_THREE
from su23.gens.gen_triple import GenTriple
from su23.verify.check import CheckRecorder
from su23.verify.check_result import CheckResult
from su23.verify.commutator import s_indices
from su23.verify.displays import difference_vector, fixed_vector, s_bar_sigma, s_sigma, sigma_roots

logger = logging.getLogger(__name__)

SUITE = 'spectral structure'

CLAIMS = {
    'bireflection': 'C = [x,y]^24 satisfies rank(C - I) = 2',
    'fixed_on_s': 'C fixes a 4-dimensional subspace of <S>',
    'diagonalizable': 'the minimal polynomial of C is squarefree',
    'transpose_diagonalizable': 'the minimal polynomial of C^T is squarefree',
    'sigma_in_field': 'sigma and 1/sigma are roots of the quadratic factor of chi_0 in GF(q^2)',
    'sigma_order': 'sigma^48 != 1',
    'sigma_is_a_cubed': 'for p = 2, {sigma, 1/sigma} = {a^3, a^-3}',
    'eigenvector': 's_lambda is an eigenvector of [x,y] for lambda in {sigma, 1/sigma}',
    'transpose_eigenvector': 's-bar_lambda is an eigenvector of [x,y]^T for lambda in {sigma, 1/sigma}',
    'x_swaps_eigenvectors': 'x s_sigma is a multiple of s_{1/sigma}',
    'transpose_x_swaps_eigenvectors': 'x^T s-bar_sigma is a multiple of s-bar_{1/sigma}',
    'fixed_vector': '[x,y] v = v',
    'difference_vector': 'w is a multiple of s_sigma - s_{1/sigma}',
    'premise_in_s': 'yw - e_{n-5}, y^2 w, xyw - e_{n-6} and xy^2 w lie in <S>',
    'premise_minor': 'their minor on the coordinates n-4, n-3, n-1, n is nonzero',
    'premise_excludes_v': 'v is not in their span',
}


def _squarefree(matrix: Mat) -> bool:
    f = minimal_polynomial(matrix)
    return gcd(f, f.derivative()).degree == 0


def check_spectral_structure(tri: GenTriple) -> List[CheckResult]:
    case = tri.case
    if case.regime not in (REGIME_NORM_THREE, REGIME_CHAR_THREE):
        raise CaseNotApplicable(SUITE, f'regime {case.regime} has no sigma eigenvalues')
    checks = CheckRecorder(SUITE, CLAIMS)
    ctx, n, a = tri.ctx, tri.n, tri.a
    x, y = tri.x, tri.y
    commutator = tri.commutator()
    C = commutator ** 24
    inside = s_indices(n)

    checks.equal('bireflection', fixed_space_rank_defect(C), 2)
    checks.equal('fixed_on_s', len(inside) - fixed_space_rank_defect(C.submatrix(inside)), 4)
    checks.holds('diagonalizable', _squarefree(C))
    checks.holds('transpose_diagonalizable', _squarefree(C.T))

    roots = sigma_roots(a)
    if not checks.equal('sigma_in_field', len(roots), 2):
        return checks.results
    sigma, sigma_inv = sorted(roots)
    checks.holds('sigma_order', sigma ** 48 != 1, {'sigma': sigma.to_jsonnable()})
    if ctx.p == 2:
        checks.holds('sigma_is_a_cubed', {sigma, sigma_inv} == {a ** 3, (a ** 3).inverse()})

    s = {lam: s_sigma(n, a, lam) for lam in (sigma, sigma_inv)}
    s_bar = {lam: s_bar_sigma(n, a, lam) for lam in (sigma, sigma_inv)}
    for lam in (sigma, sigma_inv):
        witness = {'lambda': lam.to_jsonnable()}
        checks.holds('eigenvector', is_eigenvector(commutator, s[lam], lam), witness)
        checks.holds('transpose_eigenvector', is_eigenvector(commutator.T, s_bar[lam], lam), witness)
    checks.holds('x_swaps_eigenvectors', projectively_equal(ctx, x.apply(s[sigma]), s[sigma_inv]))
    checks.holds('transpose_x_swaps_eigenvectors',
                 projectively_equal(ctx, x.T.apply(s_bar[sigma]), s_bar[sigma_inv]))

    v = fixed_vector(n, a)
    checks.holds('fixed_vector', commutator.apply(v) == v)

    w = difference_vector(n, a)
    checks.holds('difference_vector',
                 projectively_equal(ctx, w, add_vectors(ctx, s[sigma], scale_vector(ctx, ctx.from_int(-1),
                                                                                   s[sigma_inv]))))

    minus_one = ctx.from_int(-1)
    yw, y2w = y.apply(w), y.apply(y.apply(w))
    premise = [add_vectors(ctx, yw, scale_vector(ctx, minus_one, unit_vector(n, n - 6))),
               y2w,
               add_vectors(ctx, x.apply(yw), scale_vector(ctx, minus_one, unit_vector(n, n - 7))),
               x.apply(y2w)]
    outside = [i for i in range(n) if i not in set(inside)]
    stray = [index + 1 for index, vector in enumerate(premise) if any(vector[i] for i in outside)]
    checks.holds('premise_in_s', not stray, {'vectors_outside_s': stray} if stray else None)
    coordinates = [n - 5, n - 4, n - 2, n - 1]
    minor = Mat.from_columns(ctx, [[vector[i] for i in coordinates] for vector in premise]).det()
    checks.holds('premise_minor', not minor.is_zero())
    checks.holds('premise_excludes_v', not span_contains(ctx, premise, v))
    logger.debug(f'sigma = {sigma} for {case}')
    return checks.results
