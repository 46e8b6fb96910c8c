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
"""Exhaustive enumeration of tiny special unitary groups, used as an oracle for the order formula and for the
stabilizer chain."""
import logging
from collections import deque
from itertools import product
from random import Random
from typing import List, Optional, Sequence, Set

from su23.algebra.ff import FieldCtx
from su23.algebra.linalg import Mat, Vector
from su23.common.config_helper import ConfigHelper
from su23.exceptions.exceptions import FieldTooLarge

logger = logging.getLogger(__name__)


def _form_value(ctx: FieldCtx, J: Mat, u: Sequence[int], v: Sequence[int]) -> int:
    """u^T J v^psi."""
    v_psi = [ctx.frob_q(x) for x in v]
    return ctx.sum(ctx.mul(x, y) for x, y in zip(u, J.apply(v_psi)))


def enumerate_su(ctx: FieldCtx, n: int, J: Optional[Mat] = None) -> List[Mat]:
    """Every g with g^T J g^psi = J and det g = 1, by backtracking over the columns of g."""
    J = J if J is not None else Mat.identity(ctx, n)
    size = ctx.order ** n
    bound = ConfigHelper.get_instance().brute_force_roots_bound
    if size > bound:
        raise FieldTooLarge(size, bound)
    vectors: List[Vector] = [list(v) for v in product(range(ctx.order), repeat=n)]
    groups = []

    def extend(columns: List[Vector]):
        i = len(columns)
        if i == n:
            g = Mat.from_columns(ctx, columns)
            if g.det() == 1:
                groups.append(g)
            return
        for v in vectors:
            if _form_value(ctx, J, v, v) != J.rows[i][i]:
                continue
            if any(_form_value(ctx, J, columns[k], v) != J.rows[k][i] or
                   _form_value(ctx, J, v, columns[k]) != J.rows[i][k] for k in range(i)):
                continue
            extend(columns + [v])

    extend([])
    logger.debug(f'Enumerated {len(groups)} elements of SU_{n} over {ctx}')
    return groups


def generated_group(gens: Sequence[Mat], limit: Optional[int] = None) -> Set[Mat]:
    """Closure of the generators under right multiplication, breadth first."""
    ctx, n = gens[0].ctx, gens[0].n
    identity = Mat.identity(ctx, n)
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g * s
            if h not in seen:
                seen.add(h)
                if limit is not None and len(seen) > limit:
                    return seen
                queue.append(h)
    return seen


def small_generating_set(elements: Sequence[Mat], seed: int = 1) -> List[Mat]:
    """Random elements are added until they generate all of elements."""
    rng = Random(seed)
    target = len(elements)
    gens: List[Mat] = []
    closure: Set[Mat] = set()
    while len(closure) < target:
        candidate = elements[rng.randrange(target)]
        if candidate in closure:
            continue
        gens.append(candidate)
        closure = generated_group(gens)
    return gens
