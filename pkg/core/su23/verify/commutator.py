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
"""[x,y] on the coordinate basis: it preserves <S>, S = {e_{n-7}, e_{n-4}, ..., e_n}, and permutes the rest."""
import logging
from typing import List, Tuple

from su23.algebra.linalg import charpoly, unit_vector
from su23.exceptions.exceptions import CaseNotApplicable
from su23.gens.gen_triple import GenTriple
from su23.groupfacts.element_order import element_order
from su23.verify.check import CheckRecorder
from su23.verify.check_result import CheckResult
from su23.verify.displays import commutator_charpoly_on_s

logger = logging.getLogger(__name__)

SUITE = 'commutator action'

CLAIMS = {
    's_invariant': '[x,y] leaves <S> invariant',
    'permutes_rest': '[x,y] permutes the basis vectors outside S by the displayed cycles',
    'restriction_order': 'the permutation part has order 2 (n=9), 4 (n=10), 8 (n=14), 3*2^(r+1) otherwise',
    'charpoly_on_s': 'the characteristic polynomial of [x,y] on <S> is (t-1)(t+1) chi_0(t)',
}


def s_indices(n: int) -> List[int]:
    """0-based indices of S."""
    return [n - 8] + list(range(n - 5, n))


def rest_indices(n: int) -> List[int]:
    inside = set(s_indices(n))
    return [i for i in range(n) if i not in inside]


def cycles_outside_s(n: int) -> List[Tuple[int, ...]]:
    """Cycles (1-based) of [x,y] on the basis vectors outside S; e_a maps to the next entry."""
    r = n % 3
    if r == 0:
        return [(3, 4)] + [(2 + 3 * i, 7 + 3 * i, 6 + 3 * i) for i in range((n - 12) // 3 + 1)]
    if r == 1:
        return [(1, 5, 4, 2)] + [(3 + 3 * i, 8 + 3 * i, 7 + 3 * i) for i in range((n - 13) // 3 + 1)]
    return [(1, 6, 5, 3, 4, 9, 8, 2)] + [(4 + 3 * i, 9 + 3 * i, 8 + 3 * i) for i in range(1, (n - 14) // 3 + 1)]


def expected_restriction_order(n: int) -> int:
    special = {9: 2, 10: 4, 14: 8}
    return special.get(n, 3 * 2 ** (n % 3 + 1))


def permutation_images(n: int) -> dict:
    """0-based image of every index outside S; indices in no cycle are fixed."""
    images = {i: i for i in rest_indices(n)}
    for cycle in cycles_outside_s(n):
        for position, point in enumerate(cycle):
            images[point - 1] = cycle[(position + 1) % len(cycle)] - 1
    return images


def check_commutator_action(tri: GenTriple) -> List[CheckResult]:
    case = tri.case
    if not case.commutator_analysis_applies:
        raise CaseNotApplicable(SUITE, 'needs q > 2 and n not in {8, 11}')
    checks = CheckRecorder(SUITE, CLAIMS)
    n = tri.n
    commutator = tri.commutator()
    inside, outside = s_indices(n), rest_indices(n)

    checks.holds('s_invariant', commutator.leaves_invariant(inside))

    wrong = [(source + 1, target + 1) for source, target in permutation_images(n).items()
             if commutator.column(source) != unit_vector(n, target)]
    checks.holds('permutes_rest', not wrong, {'expected_images_violated': wrong} if wrong else None)

    order = element_order(commutator.submatrix(outside))
    checks.equal('restriction_order', order, expected_restriction_order(n))

    restricted = charpoly(commutator.submatrix(inside))
    expected = commutator_charpoly_on_s(tri.a)
    mismatched = [i for i in range(7) if restricted.coefficient(i) != expected.coefficient(i)]
    checks.holds('charpoly_on_s', not mismatched,
                 {'coefficient_indices': mismatched, 'actual': repr(restricted), 'expected': repr(expected)}
                 if mismatched else None)
    logger.debug(f'[x,y] on <S> for {case}: {restricted}')
    return checks.results
