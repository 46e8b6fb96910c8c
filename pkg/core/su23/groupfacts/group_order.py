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
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, List

from su23.algebra.integers import factor_integer, factor_power_minus_one, factor_power_plus_one, multiply_out, \
    prime_power
from su23.exceptions.exceptions import UnsupportedCase


@dataclass(frozen=True)
class GroupOrder:
    """Order of a finite classical group in factored form."""
    name: str
    n: int
    q: int
    factors: Dict[int, int]

    @property
    def order(self) -> int:
        return multiply_out(self.factors)

    @property
    def prime_set(self) -> List[int]:
        return sorted(self.factors)

    def divides(self, other: 'GroupOrder') -> bool:
        return all(other.factors.get(prime, 0) >= exponent for prime, exponent in self.factors.items())

    def center_primes(self) -> List[int]:
        """Primes dividing gcd(n, q+1), the order of the center of SU_n(q^2)."""
        return sorted(factor_integer(gcd(self.n, self.q + 1)))

    def to_dict(self) -> dict:
        return {
            'group': self.name,
            'n': self.n,
            'q': self.q,
            'order': str(self.order),
            'factors': {str(prime): exponent for prime, exponent in sorted(self.factors.items())},
            'primes': self.prime_set
        }


def _prime_power_or_raise(q: int):
    decomposition = prime_power(q)
    if decomposition is None:
        raise UnsupportedCase(f'q={q} is not a prime power')
    return decomposition


@lru_cache(maxsize=None)
def su_order(n: int, q: int) -> GroupOrder:
    """|SU_n(q^2)| = q^{n(n-1)/2} prod_{i=2}^{n} (q^i - (-1)^i)."""
    if n < 2:
        raise UnsupportedCase(f'SU_n needs n >= 2, got {n}')
    p, f = _prime_power_or_raise(q)
    total = Counter({p: f * n * (n - 1) // 2})
    for i in range(2, n + 1):
        total.update(factor_power_minus_one(q, i) if i % 2 == 0 else factor_power_plus_one(q, i))
    return GroupOrder('SU', n, q, dict(total))


@lru_cache(maxsize=None)
def gu_order(n: int, q: int) -> GroupOrder:
    """|GU_n(q^2)| = (q+1) |SU_n(q^2)|."""
    total = Counter(su_order(n, q).factors)
    total.update(factor_integer(q + 1))
    return GroupOrder('GU', n, q, dict(total))


@lru_cache(maxsize=None)
def gl_order(n: int, q: int) -> GroupOrder:
    """|GL_n(q^2)| = q^{n(n-1)} prod_{i=1}^{n} (q^{2i} - 1)."""
    p, f = _prime_power_or_raise(q)
    total = Counter({p: f * n * (n - 1)})
    for i in range(1, n + 1):
        total.update(factor_power_minus_one(q, 2 * i))
    return GroupOrder('GL', n, q, dict(total))
