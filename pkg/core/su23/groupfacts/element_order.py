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
from math import gcd
from typing import Dict, Optional, Union

from su23.algebra.integers import factor_integer, factor_power_minus_one, multiply_out, valuation
from su23.algebra.linalg import Mat, minimal_polynomial
from su23.algebra.poly import Poly, factor
from su23.exceptions.exceptions import CapExceeded, NotInvertible
from su23.groupfacts.group_order import GroupOrder

logger = logging.getLogger(__name__)

Cap = Union[int, GroupOrder]


def _cap_factors(cap: Cap) -> Dict[int, int]:
    if isinstance(cap, GroupOrder):
        return cap.factors
    return factor_integer(cap)


def _restrict(factors: Dict[int, int], n: int) -> Dict[int, int]:
    """Factorization of gcd(n, prod prime^exponent) from the known factors."""
    return {prime: min(exponent, valuation(n, prime)) for prime, exponent in factors.items()
            if n % prime == 0}


def _order_of_t_modulo(g: Poly, factors: Dict[int, int]) -> Optional[int]:
    """Order of t in (GF(Q)[t]/g)^*, provided it divides the number with the given factorization."""
    t = Poly.t(g.ctx)
    exponent = multiply_out(factors)
    if not t.pow_mod(exponent, g).is_one():
        return None
    order = exponent
    for prime in sorted(factors):
        while order % prime == 0 and t.pow_mod(order // prime, g).is_one():
            order //= prime
    return order


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def element_order(A: Mat, cap: Optional[Cap] = None) -> int:
    """Exact multiplicative order of an invertible matrix.

    The minimal polynomial is factored; the semisimple part of each irreducible factor g of degree k has order
    dividing Q^k - 1 (or its gcd with cap), and the unipotent part contributes the least p^s at least the largest
    multiplicity.
    """
    ctx = A.ctx
    if A.det().is_zero():
        raise NotInvertible('element_order needs an invertible matrix')
    cap_factors = _cap_factors(cap) if cap is not None else None
    Q = ctx.order
    order = 1
    max_multiplicity = 1
    for g, multiplicity in factor(minimal_polynomial(A)):
        k = g.degree
        if cap_factors is not None:
            factors = _restrict(cap_factors, Q ** k - 1)
        else:
            factors = factor_power_minus_one(Q, k)
        part = _order_of_t_modulo(g, factors)
        if part is None:
            raise CapExceeded(order, multiply_out(cap_factors))
        order = _lcm(order, part)
        max_multiplicity = max(max_multiplicity, multiplicity)
    p_part = 1
    while p_part < max_multiplicity:
        p_part *= ctx.p
    order *= p_part
    if cap_factors is not None and multiply_out(cap_factors) % order:
        raise CapExceeded(order, multiply_out(cap_factors))
    return order
