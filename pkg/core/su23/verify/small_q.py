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
"""Prime-divisor certificates for the cells whose parameter comes from the small-q tables.

T1 = <e_1, ..., e_{n-9}> and T2 = <e_{n-8}, ..., e_n>. For large n the group <zeta, y> splits along T1 + T2 and
its action on T2 is certified against SU_9(q^2); the remaining cells use the words [x,y](xy)^j on the whole
space.
"""
import logging
from typing import List, Tuple

from su23.algebra.linalg import Mat
from su23.exceptions.exceptions import CaseNotApplicable
from su23.gens.gen_triple import GenTriple
from su23.gens.tables import SMALL_Q_WORDS, commutator_word_exponents
from su23.groupfacts.coverage import CoverageCertificate, prime_coverage_certificate
from su23.groupfacts.group_order import gu_order, su_order
from su23.verify.check import CheckRecorder
from su23.verify.check_result import CheckResult

logger = logging.getLogger(__name__)

SUITE = 'small q certificates'

CLAIMS = {
    'zeta_splits': 'zeta leaves T1 and T2 invariant',
    'y_splits': 'y leaves T1 and T2 invariant',
    'monomial_on_t1': 'zeta and y act on T1 as monomial matrices whose entries are cube roots of unity',
    'zeta_trivial_on_t1': 'zeta = [x,y]^24 is the identity on T1',
    'coverage_t2': 'the orders of the listed words on T2 cover exactly the primes dividing |SU_9(q^2)|',
    'coverage': 'the orders of [x,y](xy)^j cover exactly the primes dividing |SU_n(q^2)|',
}

LARGE_Q_VALUES = (3, 5, 7, 8, 11)
Q2_SPLIT_DEGREES = (9, 10, 14, 15, 16)


def splitting_case(n: int, q: int) -> bool:
    if q in LARGE_Q_VALUES:
        return n in (15, 16) or n >= 18
    if q == 2:
        return n in Q2_SPLIT_DEGREES or n >= 18
    return False


def split_indices(n: int) -> Tuple[List[int], List[int]]:
    """0-based indices of T1 and T2."""
    return list(range(n - 9)), list(range(n - 9, n))


def is_monomial_of_cube_roots(block: Mat) -> bool:
    rows = block.rows
    ctx = block.ctx
    for row in rows:
        nonzero = [x for x in row if x]
        if len(nonzero) != 1 or ctx.pow(nonzero[0], 3) != 1:
            return False
    return all(sum(1 for row in rows if row[j]) == 1 for j in range(block.n))


def _certify(checks: CheckRecorder, name: str, words: List[Mat], target, cap, exponents, labels) -> \
        CoverageCertificate:
    certificate = prime_coverage_certificate(words, target, cap=cap, labels=labels, exponents=exponents)
    checks.holds(name, certificate.is_passed(), certificate.to_dict())
    return certificate


def _split_words(tri: GenTriple, checks: CheckRecorder):
    n, q = tri.n, tri.case.q
    entry = SMALL_Q_WORDS[q]
    commutator = tri.commutator()
    zeta = commutator ** 24 if q == 2 else commutator ** 3
    y = tri.y
    t1, t2 = split_indices(n)

    checks.holds('zeta_splits', zeta.leaves_invariant(t1) and zeta.leaves_invariant(t2))
    checks.holds('y_splits', y.leaves_invariant(t1) and y.leaves_invariant(t2))
    zeta_t1, y_t1 = zeta.submatrix(t1), y.submatrix(t1)
    if q == 2:
        checks.holds('zeta_trivial_on_t1', zeta_t1.is_identity())
    else:
        checks.holds('monomial_on_t1', is_monomial_of_cube_roots(zeta_t1) and is_monomial_of_cube_roots(y_t1))

    zeta_t2, y_t2 = zeta.submatrix(t2), y.submatrix(t2)
    base = zeta_t2 ** entry.zeta_exponent * y_t2
    words = [base ** j * y_t2 for j in entry.exponents]
    labels = [entry.word_description().replace('^j', f'^{j}') for j in entry.exponents]
    _certify(checks, 'coverage_t2', words, su_order(9, q), gu_order(9, q), entry.exponents, labels)


def _commutator_words(tri: GenTriple, checks: CheckRecorder, exponents: Tuple[int, ...]):
    n, q = tri.n, tri.case.q
    commutator, xy = tri.commutator(), tri.xy()
    words = [commutator * xy ** j for j in exponents]
    labels = [f'[x,y](xy)^{j}' for j in exponents]
    _certify(checks, 'coverage', words, su_order(n, q), gu_order(n, q), exponents, labels)


def check_small_q_certificates(tri: GenTriple) -> List[CheckResult]:
    n, q = tri.n, tri.case.q
    exponents = commutator_word_exponents(n, q)
    if splitting_case(n, q):
        checks = CheckRecorder(SUITE, CLAIMS)
        _split_words(tri, checks)
    elif exponents is not None:
        checks = CheckRecorder(SUITE, CLAIMS)
        _commutator_words(tri, checks, exponents)
    else:
        raise CaseNotApplicable(SUITE, f'no word list for n={n}, q={q}')
    logger.debug(f'Small q certificates for {tri.case}: '
                 f'{sum(1 for result in checks.results if result.passed)}/{len(checks.results)} passed')
    return checks.results
