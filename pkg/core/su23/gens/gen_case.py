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
from dataclasses import dataclass

from su23.algebra.integers import prime_power
from su23.exceptions.exceptions import UnsupportedCase

TAG_Q2 = 'q2'
TAG_P3 = 'p3'
TAG_GENERIC = 'generic'
TAG_N8 = 'n8-special'
TAG_N11 = 'n11-special'

REGIME_PARAMETER_FREE = 'parameter-free'
REGIME_NORM_THREE = 'norm-three'
REGIME_CHAR_THREE = 'char-three'
REGIME_SMALL_Q = 'small-q'
REGIME_N8 = 'n8'
REGIME_N11 = 'n11'

SMALL_Q_VALUES = (3, 5, 7, 8, 11)
N8_SMALL_Q_VALUES = (3, 5, 8)

EXCLUDED_BY_THEOREM = ((3, 2), (3, 3), (3, 5), (4, 2), (4, 3), (5, 2))
MIN_DEGREE = 8


def is_excluded_by_theorem(n: int, q: int) -> bool:
    return (n, q) in EXCLUDED_BY_THEOREM


@dataclass(frozen=True)
class GenCase:
    n: int
    q: int
    p: int
    f: int
    tag: str

    @staticmethod
    def for_cell(n: int, q: int) -> 'GenCase':
        if is_excluded_by_theorem(n, q):
            raise UnsupportedCase(
                f'SU_{n}({q}^2) is not (2,3)-generated: (n,q) is one of the exceptions '
                f'{", ".join(str(pair) for pair in EXCLUDED_BY_THEOREM)}')
        if n < MIN_DEGREE:
            raise UnsupportedCase(f'n={n} is below {MIN_DEGREE}; dimensions 3 to 7 are not constructed here')
        pf = prime_power(q)
        if pf is None:
            raise UnsupportedCase(f'q={q} is not a prime power')
        p, f = pf
        if q == 2:
            tag = TAG_Q2
        elif n == 11:
            tag = TAG_N11
        elif n == 8:
            tag = TAG_N8
        elif p == 3:
            tag = TAG_P3
        else:
            tag = TAG_GENERIC
        return GenCase(n=n, q=q, p=p, f=f, tag=tag)

    @property
    def r(self) -> int:
        return self.n % 3

    @property
    def m(self) -> int:
        return (self.n - self.r) // 3

    @property
    def field_degree(self) -> int:
        return 2 * self.f

    @property
    def needs_parameter(self) -> bool:
        return self.q > 2

    @property
    def uses_char_three_blocks(self) -> bool:
        return self.p == 3

    @property
    def uses_replacement_generators(self) -> bool:
        return self.tag == TAG_N11

    @property
    def regime(self) -> str:
        """Which family of conditions the parameter a has to satisfy."""
        if self.q == 2:
            return REGIME_PARAMETER_FREE
        if self.n == 11:
            return REGIME_N11
        if self.n == 8:
            return REGIME_SMALL_Q if self.q in N8_SMALL_Q_VALUES else REGIME_N8
        if self.q in SMALL_Q_VALUES:
            return REGIME_SMALL_Q
        return REGIME_CHAR_THREE if self.p == 3 else REGIME_NORM_THREE

    @property
    def commutator_analysis_applies(self) -> bool:
        """[x,y] fixes C minus S setwise only when x fixes e_{n-7}, i.e. q > 2 and n not in {8, 11}."""
        return self.q > 2 and self.n not in (8, 11)

    def __str__(self):
        return f'(n={self.n}, q={self.q}, {self.tag})'

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'q': self.q,
            'p': self.p,
            'f': self.f,
            'tag': self.tag,
            'regime': self.regime,
            'r': self.r,
            'm': self.m
        }
