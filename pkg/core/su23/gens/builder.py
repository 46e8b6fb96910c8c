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
from typing import Dict, List, Optional, Sequence

from su23.algebra.ff import FFElem, FieldCtx, make_quadratic_extension
from su23.algebra.linalg import Mat, Vector, unit_vector
from su23.exceptions.exceptions import AssemblyError, BadParameter
from su23.gens.conditions import check_conditions
from su23.gens.gen_case import GenCase
from su23.gens.gen_triple import GenTriple
from su23.gens.n11_builder import build_n11_generators
from su23.gens.param_derived import ParamDerived

logger = logging.getLogger(__name__)


def primitive_cube_root(ctx: FieldCtx) -> FFElem:
    """omega, the element of order 3 with the smallest code."""
    return ctx.element(ctx.elements_of_order(3)[0])


def primitive_fourth_root(ctx: FieldCtx) -> FFElem:
    """iota, the element of order 4 with the smallest code."""
    return ctx.element(ctx.elements_of_order(4)[0])


class BasisAssembly:
    """Collects the image of every basis vector e_1..e_n from a list of rules, 1-based like the rules read.

    Assigning the same image twice is accepted; a conflicting image or a missing basis vector aborts.
    """

    def __init__(self, ctx: FieldCtx, n: int, name: str):
        self.ctx = ctx
        self.n = n
        self.name = name
        self.images: Dict[int, Vector] = {}
        self.rules: Dict[int, str] = {}

    def assign(self, index: int, image: Sequence[int], rule: str):
        if not 1 <= index <= self.n:
            raise AssemblyError(f'{self.name}: rule "{rule}" refers to e_{index} outside 1..{self.n}')
        image = list(image)
        if index in self.images and self.images[index] != image:
            raise AssemblyError(
                f'{self.name}: rules "{self.rules[index]}" and "{rule}" disagree on the image of e_{index}')
        self.images[index] = image
        self.rules.setdefault(index, rule)

    def e(self, index: int) -> Vector:
        return unit_vector(self.n, index - 1)

    def fix(self, index: int, rule: str):
        self.assign(index, self.e(index), rule)

    def swap(self, i: int, j: int, rule: str):
        self.assign(i, self.e(j), rule)
        self.assign(j, self.e(i), rule)

    def cycle(self, indices: Sequence[int], rule: str):
        """e_{i_0} -> e_{i_1} -> ... -> e_{i_0}."""
        for k, index in enumerate(indices):
            self.assign(index, self.e(indices[(k + 1) % len(indices)]), rule)

    def block(self, first: int, block: Mat, rule: str):
        """Act on e_first..e_{first+k-1} as the k x k matrix block (columns are images)."""
        for j in range(block.ncols):
            image = [0] * self.n
            for i in range(block.nrows):
                image[first - 1 + i] = block.rows[i][j]
            self.assign(first + j, image, rule)

    def to_mat(self) -> Mat:
        missing = [i for i in range(1, self.n + 1) if i not in self.images]
        if missing:
            raise AssemblyError(f'{self.name}: no rule covers {", ".join(f"e_{i}" for i in missing)}')
        return Mat.from_columns(self.ctx, [self.images[i] for i in range(1, self.n + 1)])


def x_block(case: GenCase, ctx: FieldCtx, a: Optional[FFElem]) -> Mat:
    """The action of x on e_{n-3}, ..., e_n."""
    if case.q == 2:
        w = primitive_cube_root(ctx)
        w2 = w * w
        return Mat.from_elems(ctx, [[1, 1, w, 0],
                                    [1, 0, w, w],
                                    [w2, w2, 0, 1],
                                    [0, w2, 1, 1]])
    if case.p == 3:
        return Mat.from_ints(ctx, [[0, 1, 0, 0],
                                   [1, 0, 0, 0],
                                   [0, 0, 0, 1],
                                   [0, 0, 1, 0]])
    return Mat.from_elems(ctx, [[0, 1, 0, 0],
                                [1, 0, 0, 0],
                                [0, 0, -1, a],
                                [0, 0, 0, 1]])


def y_block(case: GenCase, ctx: FieldCtx, a: Optional[FFElem]) -> Mat:
    """The action of y on e_{n-2}, e_{n-1}, e_n."""
    if case.q == 2:
        return Mat.from_ints(ctx, [[0, 0, 1],
                                   [1, 0, 0],
                                   [0, 1, 0]])
    if case.p == 3:
        return Mat.from_elems(ctx, [[1, 0, a],
                                    [-a.frobenius_q(), 1, a],
                                    [0, 0, 1]])
    d = ParamDerived.from_a(a)
    c_inv = d.c.inverse()
    c_inv2 = c_inv * c_inv
    return Mat.from_elems(ctx, [[d.b * c_inv, -d.a_q * d.gamma * c_inv2, 2 * d.gamma * c_inv2],
                                [1, -d.b * c_inv, -d.b_q * c_inv],
                                [0, 1, 0]])


def build_x(case: GenCase, ctx: FieldCtx, a: Optional[FFElem]) -> Mat:
    n, r, m, q = case.n, case.r, case.m, case.q
    x = BasisAssembly(ctx, n, f'x_{n}')
    if r == 0 and n > 9:
        x.fix(1, 'r=0, n>9: x fixes e_1')
        x.fix(2, 'r=0, n>9: x fixes e_2')
    elif r == 1:
        x.swap(1, 2, 'r=1: x swaps e_1, e_2')
        if (n, q) != (10, 2):
            x.fix(3, 'r=1, (n,q)!=(10,2): x fixes e_3')
    elif r == 2:
        x.swap(1, 3, 'r=2: x swaps e_1, e_3')
        x.swap(2, 4, 'r=2: x swaps e_2, e_4')
    if n not in (8, 11):
        if q > 2:
            x.fix(n - 7, 'n!=8,11, q>2: x fixes e_{n-7}')
            x.fix(n - 4, 'n!=8,11, q>2: x fixes e_{n-4}')
        else:
            x.swap(n - 7, n - 4, 'n!=8,11, q=2: x swaps e_{n-7}, e_{n-4}')
    if n == 9:
        x.fix(1, 'n=9: x fixes e_1')
    if n == 11:
        x.fix(7, 'n=11: x fixes e_7')
    for j in range(m - 4):
        x.fix(3 * j + 5 + r, 'x fixes e_{3j+5+r}')
    for j in range(m - 2):
        x.swap(3 * j + 3 + r, 3 * j + 4 + r, 'x swaps e_{3j+3+r}, e_{3j+4+r}')
    x.block(n - 3, x_block(case, ctx, a), 'x on e_{n-3}..e_n')
    return x.to_mat()


def build_y(case: GenCase, ctx: FieldCtx, a: Optional[FFElem]) -> Mat:
    n, r, m = case.n, case.r, case.m
    y = BasisAssembly(ctx, n, f'y_{n}')
    for i in range(1, r + 1):
        y.fix(i, 'y fixes e_1..e_r')
    for j in range(m - 1):
        y.cycle([3 * j + 1 + r, 3 * j + 2 + r, 3 * j + 3 + r], 'y cycles e_{3j+1+r}, e_{3j+2+r}, e_{3j+3+r}')
    y.block(n - 2, y_block(case, ctx, a), 'y on e_{n-2}..e_n')
    return y.to_mat()


def build_form(case: GenCase, ctx: FieldCtx, a: Optional[FFElem]) -> Mat:
    """The Hermitian form J_n preserved by x and y."""
    n = case.n
    if case.q == 2:
        return Mat.identity(ctx, n)
    if case.p == 3:
        return Mat.block_diagonal(ctx, [Mat.identity(ctx, n - 2), Mat.from_ints(ctx, [[0, 1], [1, 0]])])
    d = ParamDerived.from_a(a)
    scale = d.gamma / d.c
    j2 = Mat.from_elems(ctx, [[2 * scale, -d.a_q * scale],
                              [-a * scale, 2 * scale]])
    return Mat.block_diagonal(ctx, [Mat.scalar(ctx, n - 2, d.c), j2])


def build_generators(case: GenCase, a: Optional[FFElem] = None, require_conditions: bool = True) -> GenTriple:
    """x_n(a), y_n(a) and J_n for the case; the replacement generators when n = 11 and q > 2."""
    if case.uses_replacement_generators:
        return build_n11_generators(case, a, require_conditions=require_conditions)

    ctx = make_quadratic_extension(case.q)
    notes: List[str] = []
    if case.needs_parameter:
        if a is None:
            raise BadParameter(f'{case} needs a parameter a in GF({case.q}^2)', ['parameter supplied'])
        if a.ctx is not ctx:
            raise BadParameter(f'a={a} does not lie in {ctx}')
        report = check_conditions(case, a)
        if not report.is_passed():
            failed = report.failed_clauses()
            if require_conditions:
                raise BadParameter(f'a={a} violates {", ".join(failed)} for {case}', failed)
            notes.append(f'a violates {", ".join(failed)}')
        if case.p != 3 and ParamDerived.from_a(a).c.is_zero():
            raise BadParameter(f'c = a^(q+1) - 4 vanishes for a={a}', ['c = a^(q+1) - 4 != 0'])
    else:
        a = None
    if case.n == 9:
        notes.append('n=9: e_2 = e_{n-7} is fixed by the n!=8,11 rule')

    x = build_x(case, ctx, a)
    y = build_y(case, ctx, a)
    J = build_form(case, ctx, a)
    logger.debug(f'Built generators for {case} with a={a}')
    return GenTriple(case=case, a=a, x=x, y=y, J=J, notes=notes)
