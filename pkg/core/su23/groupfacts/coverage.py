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
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from su23.algebra.integers import factor_integer
from su23.algebra.linalg import Mat
from su23.groupfacts.element_order import Cap, element_order
from su23.groupfacts.group_order import GroupOrder

logger = logging.getLogger(__name__)


@dataclass
class WordOrder:
    label: str
    order: int
    primes: List[int]
    j: Optional[int] = None

    def to_dict(self) -> dict:
        return {'word': self.label, 'j': self.j, 'order': str(self.order), 'primes': self.primes}


@dataclass
class CoverageCertificate:
    """Prime divisors of element orders against the prime divisors of a group order."""
    target: GroupOrder
    words: List[WordOrder] = field(default_factory=list)

    @property
    def covered(self) -> List[int]:
        return sorted({prime for word in self.words for prime in word.primes})

    @property
    def missing(self) -> List[int]:
        return sorted(set(self.target.prime_set) - set(self.covered))

    @property
    def unexpected(self) -> List[int]:
        return sorted(set(self.covered) - set(self.target.prime_set))

    def is_passed(self) -> bool:
        return bool(self.words) and not self.missing and not self.unexpected

    def csv_rows(self, n: int, q: int) -> List[tuple]:
        """Rows n, q, j, word-order, primes."""
        return [(n, q, '' if word.j is None else word.j, word.order, ' '.join(str(p) for p in word.primes))
                for word in self.words]

    def to_dict(self) -> dict:
        return {
            'target': self.target.to_dict(),
            'passed': self.is_passed(),
            'covered': self.covered,
            'missing': self.missing,
            'center_primes': self.target.center_primes(),
            'words': [word.to_dict() for word in self.words]
        }


def word_order(label: str, word: Mat, cap: Optional[Cap] = None, j: Optional[int] = None) -> WordOrder:
    order = element_order(word, cap)
    return WordOrder(label=label, order=order, primes=sorted(factor_integer(order)), j=j)


def prime_coverage_certificate(words: Sequence[Mat], target: GroupOrder, cap: Optional[Cap] = None,
                               labels: Optional[Sequence[str]] = None,
                               exponents: Optional[Sequence[int]] = None) -> CoverageCertificate:
    """Passes iff the prime divisors of the word orders are exactly the prime divisors of target."""
    certificate = CoverageCertificate(target=target)
    for index, word in enumerate(words):
        label = labels[index] if labels else f'w{index + 1}'
        j = exponents[index] if exponents else None
        certificate.words.append(word_order(label, word, cap, j))
    logger.debug(f'Coverage of {target.name}_{target.n}({target.q}^2): covered {certificate.covered}, '
                 f'missing {certificate.missing}')
    return certificate
