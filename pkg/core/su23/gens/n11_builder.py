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
from typing import Optional

from su23.algebra.ff import FFElem, make_quadratic_extension
from su23.algebra.linalg import Mat, hermitian_invariant_form
from su23.exceptions.exceptions import BadParameter
from su23.gens.conditions import check_conditions
from su23.gens.gen_case import GenCase
from su23.gens.gen_triple import GenTriple

logger = logging.getLogger(__name__)

N11 = 11


def _columns_to_mat(ctx, columns) -> Mat:
    """columns[i] maps basis index (1-based) to the coefficient of the image of e_{i+1}."""
    images = []
    for column in columns:
        image = [0] * N11
        for index, value in column.items():
            image[index - 1] = value.code if isinstance(value, FFElem) else ctx.from_int(value)
        images.append(image)
    return Mat.from_columns(ctx, images)


def build_n11_x(a: FFElem) -> Mat:
    ctx = a.ctx
    columns = []
    for j in range(5):
        columns.append({2 * j + 2: 1})
        columns.append({2 * j + 1: 1})
    columns.append({1: a, 2: a, 5: 1, 6: 1, 9: -1, 10: -1, 11: -1})
    return _columns_to_mat(ctx, columns)


def build_n11_y(a: FFElem) -> Mat:
    ctx = a.ctx
    columns = {1: {1: 1}}
    for j in range(1, 6):
        columns[2 * j] = {2 * j + 1: 1}
    for j in (1, 2):
        columns[2 * j + 1] = {1: -1, 2 * j: -1, 2 * j + 1: -1}
        columns[2 * j + 5] = {1: 1, 2 * j + 4: -1, 2 * j + 5: -1}
    columns[11] = {1: a + a.frobenius_q() + 1, 10: -1, 11: -1}
    return _columns_to_mat(ctx, [columns[i] for i in range(1, N11 + 1)])


def irreducibility_matrix_a(a: FFElem) -> Mat:
    """2x2 matrix whose determinant is f1(a)."""
    a_q = a.frobenius_q()
    return Mat.from_elems(a.ctx, [[a - 3, a_q - 3],
                                  [a * a - 2 * a - a_q, a * a_q - 2 * a - 3]])


def irreducibility_matrix_b(a: FFElem) -> Mat:
    """3x3 matrix whose determinant is f2(a), used in odd characteristic."""
    a_q = a.frobenius_q()
    s = a + a_q
    return Mat.from_elems(a.ctx, [
        [s + 4, 4 * (a_q + 2), 4 * (a_q + 3)],
        [-2 * (a_q + 2), -(s + 2) ** 2 - 8 * (a_q + 2), -2 * (a_q * a_q + a * a_q + 7 * a_q + a + 12)],
        [2 * (a_q + 3), 2 * (a_q * a_q + 7 * a_q + a * a_q + a + 12), -(s ** 2) + 4 * (a_q * a_q - 2 * a + 2 * a_q + 3)],
    ])


def build_n11_generators(case: GenCase, a: Optional[FFElem], require_conditions: bool = True) -> GenTriple:
    """Replacement generators for n = 11; the form is recovered as the unique invariant Hermitian form."""
    ctx = make_quadratic_extension(case.q)
    if a is None:
        raise BadParameter(f'{case} needs a parameter a in GF({case.q}^2)', ['parameter supplied'])
    if a.ctx is not ctx:
        raise BadParameter(f'a={a} does not lie in {ctx}')
    notes = []
    report = check_conditions(case, a)
    if not report.is_passed():
        failed = report.failed_clauses()
        if require_conditions:
            raise BadParameter(f'a={a} violates {", ".join(failed)} for {case}', failed)
        notes.append(f'a violates {", ".join(failed)}')
    x = build_n11_x(a)
    y = build_n11_y(a)
    J, dimension = hermitian_invariant_form([x, y])
    notes.append(f'invariant form space has dimension {dimension}')
    logger.debug(f'Built replacement generators for {case} with a={a}')
    return GenTriple(case=case, a=a, x=x, y=y, J=J, notes=notes)
