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
from dataclasses import dataclass, field
from typing import List, Optional

from su23.algebra.ff import FFElem, FieldCtx, make_field
from su23.algebra.linalg import Mat
from su23.gens.gen_case import GenCase
from su23.gens.param_derived import ParamDerived


@dataclass
class GenTriple:
    """A generating pair x, y of order 2 and 3 together with the Hermitian form J they preserve."""
    case: GenCase
    a: Optional[FFElem]
    x: Mat
    y: Mat
    J: Mat
    notes: List[str] = field(default_factory=list)

    @property
    def ctx(self) -> FieldCtx:
        return self.x.ctx

    @property
    def n(self) -> int:
        return self.case.n

    @property
    def derived(self) -> Optional[ParamDerived]:
        return ParamDerived.from_a(self.a) if self.a is not None else None

    @property
    def hat_x(self) -> Mat:
        """(-1)^n x, the involution that lies in SU."""
        return self.x if self.n % 2 == 0 else -self.x

    @property
    def x_inverse(self) -> Mat:
        return self.x

    @property
    def y_inverse(self) -> Mat:
        return self.y * self.y

    def commutator(self) -> Mat:
        """[x,y] = x^-1 y^-1 x y."""
        return self.x_inverse * self.y_inverse * self.x * self.y

    def xy(self) -> Mat:
        return self.x * self.y

    def to_dict(self) -> dict:
        ctx = self.ctx
        return {
            'p': ctx.p,
            'f': self.case.f,
            'modulus': list(ctx.modulus),
            'n': self.n,
            'q': self.case.q,
            'tag': self.case.tag,
            'a': self.a.to_jsonnable() if self.a is not None else None,
            'x': self.x.to_jsonnable(),
            'y': self.y.to_jsonnable(),
            'J': self.J.to_jsonnable(),
            'notes': list(self.notes)
        }

    @staticmethod
    def from_dict(data: dict) -> 'GenTriple':
        p, f = data['p'], data['f']
        ctx = make_field(p, 2 * f)
        if tuple(data['modulus']) != ctx.modulus:
            raise ValueError(f'Modulus {data["modulus"]} differs from the field modulus {list(ctx.modulus)}')
        case = GenCase.for_cell(data['n'], data['q'])
        a = ctx.element(ctx.from_digits(data['a'])) if data.get('a') is not None else None
        return GenTriple(case=case,
                         a=a,
                         x=Mat.from_jsonnable(ctx, data['x']),
                         y=Mat.from_jsonnable(ctx, data['y']),
                         J=Mat.from_jsonnable(ctx, data['J']),
                         notes=list(data.get('notes', [])))
