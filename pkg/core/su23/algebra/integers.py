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

"""Integer number theory used by the field and group-order code.

Factorizations go through sympy.factorint (trial division, then Pollard rho and p-1 with fixed
seeds), which keeps them deterministic. Numbers of the form b^k - 1 are split along cyclotomic
values first so that sympy only ever sees the much smaller pieces.
"""
import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, Optional, Tuple

from sympy import divisors, factorint, isprime, totient

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


@lru_cache(maxsize=None)
def _factor_cached(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted((int(prime), int(exponent)) for prime, exponent in factorint(n).items()))


def factor_integer(n: int) -> Dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}; factor_integer(1) == {}."""
    if n < 1:
        raise ValueError(f'Can only factor positive integers, got {n}')
    if n == 1:
        return {}
    return dict(_factor_cached(n))


def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """(p, f) with q = p^f, or None when q is not a prime power."""
    if q < 2:
        return None
    factors = factor_integer(q)
    if len(factors) != 1:
        return None
    (p, f), = factors.items()
    return p, f


def mobius(n: int) -> int:
    factors = factor_integer(n)
    if any(exponent > 1 for exponent in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(n: int) -> int:
    return int(totient(n))


@lru_cache(maxsize=None)
def cyclotomic_value(d: int, base: int) -> int:
    """Phi_d(base) from the Moebius product over the divisors of d."""
    numerator, denominator = 1, 1
    for e in divisors(d):
        mu = mobius(d // e)
        if mu == 1:
            numerator *= base ** e - 1
        elif mu == -1:
            denominator *= base ** e - 1
    value, remainder = divmod(numerator, denominator)
    assert remainder == 0
    return value


def factor_cyclotomic_value(d: int, base: int) -> Dict[int, int]:
    return factor_integer(cyclotomic_value(d, base))


def factor_power_minus_one(base: int, k: int) -> Dict[int, int]:
    """Factorization of base^k - 1 as the product of Phi_d(base) over d | k."""
    total = Counter()
    for d in divisors(k):
        total.update(factor_cyclotomic_value(d, base))
    return dict(total)


def factor_power_plus_one(base: int, k: int) -> Dict[int, int]:
    """Factorization of base^k + 1 = (base^2k - 1) / (base^k - 1)."""
    total = Counter()
    for d in divisors(2 * k):
        if k % d != 0:
            total.update(factor_cyclotomic_value(d, base))
    return dict(total)


def multiply_out(factors: Dict[int, int]) -> int:
    value = 1
    for prime, exponent in factors.items():
        value *= prime ** exponent
    return value


def valuation(n: int, prime: int) -> int:
    count = 0
    while n % prime == 0:
        n //= prime
        count += 1
    return count
