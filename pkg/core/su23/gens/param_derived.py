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

from su23.algebra.ff import FFElem


@dataclass(frozen=True)
class ParamDerived:
    """The scalars b, c and gamma derived from the parameter a in GF(q^2)."""
    a: FFElem
    a_q: FFElem
    b: FFElem
    b_q: FFElem
    c: FFElem
    gamma: FFElem

    @staticmethod
    def from_a(a: FFElem) -> 'ParamDerived':
        a_q = a.frobenius_q()
        b = 2 * a - a_q * a_q
        norm = a * a_q
        c = norm - 4
        gamma = a ** 3 + a_q ** 3 - 6 * norm + 8
        return ParamDerived(a=a, a_q=a_q, b=b, b_q=b.frobenius_q(), c=c, gamma=gamma)

    @property
    def norm(self) -> FFElem:
        return self.a * self.a_q

    @property
    def gamma_from_b(self) -> FFElem:
        """-(a^q b + a b^q + 2c), which equals gamma."""
        return -(self.a_q * self.b + self.a * self.b_q + 2 * self.c)

    @property
    def trace_hypothesis(self) -> FFElem:
        """b + ac = a^{q+2} - a^{2q} - 2a."""
        return self.b + self.a * self.c

    def to_dict(self) -> dict:
        return {
            'a': self.a.to_jsonnable(),
            'b': self.b.to_jsonnable(),
            'c': self.c.to_jsonnable(),
            'gamma': self.gamma.to_jsonnable()
        }


# (coefficient, power of a^q, power of a) for the degree-5 irreducibility determinant
_F2_TERMS = (
    (1, 5, 0), (5, 4, 1), (16, 4, 0), (10, 3, 2), (64, 3, 1), (92, 3, 0),
    (10, 2, 3), (128, 2, 2), (436, 2, 1), (424, 2, 0),
    (5, 1, 4), (64, 1, 3), (436, 1, 2), (1168, 1, 1), (1008, 1, 0),
    (1, 0, 5), (16, 0, 4), (92, 0, 3), (424, 0, 2), (1008, 0, 1), (864, 0, 0),
)


def f1(a: FFElem) -> FFElem:
    a_q = a.frobenius_q()
    return a_q * a_q - a * a_q - 3 * a_q + a * a - 3 * a + 9


def f2(a: FFElem) -> FFElem:
    a_q = a.frobenius_q()
    total = a.ctx.element(0)
    for coefficient, i, j in _F2_TERMS:
        total = total + coefficient * (a_q ** i) * (a ** j)
    return total
