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
from typing import List, Optional, Sequence

from su23.algebra.ff import FFElem, FieldCtx, make_quadratic_extension
from su23.algebra.poly import Poly, roots_in_field
from su23.common.config_helper import ConfigHelper
from su23.exceptions.exceptions import BadParameter, NoAdmissibleParameter
from su23.gens.builder import primitive_fourth_root
from su23.gens.conditions import check_conditions
from su23.gens.gen_case import GenCase, REGIME_CHAR_THREE, REGIME_N11, REGIME_N8, REGIME_NORM_THREE, \
    REGIME_SMALL_Q
from su23.gens.tables import SMALL_Q_WORDS, hint_polynomial

logger = logging.getLogger(__name__)

STRATEGY_HINTED = 'hinted'
STRATEGY_EXHAUSTIVE = 'exhaustive'
STRATEGIES = (STRATEGY_HINTED, STRATEGY_EXHAUSTIVE)


def regime_equation(case: GenCase, ctx: FieldCtx) -> Optional[Poly]:
    """The polynomial every admissible a is a root of, or None when any field element may qualify."""
    q = case.q
    regime = case.regime
    if regime == REGIME_NORM_THREE:
        return Poly.monomial(ctx, q + 1) - 3
    if regime == REGIME_CHAR_THREE or (regime == REGIME_N8 and case.p == 3):
        return Poly.monomial(ctx, q) + Poly.monomial(ctx, q - 1) + 1
    if regime == REGIME_N8:
        return Poly.monomial(ctx, q + 1) - 1
    if regime == REGIME_SMALL_Q:
        return Poly.from_ints(ctx, SMALL_Q_WORDS[q].minimal_polynomial)
    return None


def roots_of_minimal_polynomial(ctx: FieldCtx, coefficients: Sequence[int]) -> List[FFElem]:
    """Roots in ctx of the integer polynomial reduced mod p, smallest code first."""
    polynomial = Poly.from_ints(ctx, coefficients)
    if polynomial.degree < 1:
        return []
    return [root for root, _ in roots_in_field(polynomial)]


def _hinted_candidates(case: GenCase, ctx: FieldCtx) -> List[FFElem]:
    candidates = []
    if case.regime == REGIME_N8 and case.p != 3 and case.f == 1 and case.p % 4 == 3:
        candidates.append(primitive_fourth_root(ctx))
    hint = hint_polynomial(case)
    if hint is not None:
        candidates.extend(roots_of_minimal_polynomial(ctx, hint))
    return candidates


def _exhaustive_candidates(case: GenCase, ctx: FieldCtx):
    equation = regime_equation(case, ctx)
    if equation is not None:
        return (root for root, _ in roots_in_field(equation))
    bound = ConfigHelper.get_instance().enumeration_bound
    if ctx.order > bound:
        logger.warning(f'{ctx} has more than {bound} elements, exhaustive search is not possible')
        return iter(())
    return (a for a in ctx.elements() if not a.is_zero())


def _first_admissible(case: GenCase, candidates) -> Optional[FFElem]:
    for a in candidates:
        if check_conditions(case, a).is_passed():
            return a
    return None


def search_parameter(case: GenCase, strategy: str = STRATEGY_HINTED) -> Optional[FFElem]:
    """An a passing check_conditions; None when the case takes no parameter.

    hinted tries the published constructions first and falls back to the exhaustive scan, which returns the
    admissible a with the smallest code.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f'Unknown strategy {strategy}, expected one of {", ".join(STRATEGIES)}')
    if not case.needs_parameter:
        return None
    ctx = make_quadratic_extension(case.q)
    logger.info(f'Searching parameter for {case} in {ctx} ({strategy})')
    a = None
    if strategy == STRATEGY_HINTED:
        a = _first_admissible(case, _hinted_candidates(case, ctx))
    if a is None:
        a = _first_admissible(case, _exhaustive_candidates(case, ctx))
    if a is None:
        raise NoAdmissibleParameter(case.n, case.q, strategy)
    logger.info(f'Found a={a} for {case}')
    return a


def parse_parameter(case: GenCase, text: str, strategy_default: str = STRATEGY_HINTED) -> Optional[FFElem]:
    """Resolve a parameter string.

    'hinted' and 'exhaustive' (alias 'search') run search_parameter; 'poly:c0,c1,...' takes the first admissible
    root (or the first root) of that minimal polynomial; 'c0,c1,...' gives the coordinates of a over GF(p).
    """
    if not case.needs_parameter:
        return None
    text = (text or strategy_default).strip()
    if text in ('search', STRATEGY_EXHAUSTIVE):
        return search_parameter(case, STRATEGY_EXHAUSTIVE)
    if text == STRATEGY_HINTED:
        return search_parameter(case, STRATEGY_HINTED)
    ctx = make_quadratic_extension(case.q)
    try:
        if text.startswith('poly:'):
            coefficients = [int(c) for c in text[len('poly:'):].split(',')]
            roots = roots_of_minimal_polynomial(ctx, coefficients)
            if not roots:
                raise BadParameter(f'{text[len("poly:"):]} has no root in {ctx}')
            return _first_admissible(case, roots) or roots[0]
        digits = [int(c, 0) for c in text.split(',')]
    except ValueError as e:
        raise BadParameter(f'Cannot read parameter "{text}"', [str(e)])
    if len(digits) > ctx.d:
        raise BadParameter(f'{len(digits)} coordinates given, {ctx} has dimension {ctx.d} over GF({ctx.p})')
    return ctx.element(ctx.from_digits(digits))
