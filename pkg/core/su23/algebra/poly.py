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
from random import Random
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from su23.algebra.ff import FFElem, FieldCtx
from su23.algebra.integers import factor_integer
from su23.common.config_helper import ConfigHelper
from su23.exceptions.exceptions import FieldTooLarge, ZeroElement, ZeroPolynomial

logger = logging.getLogger(__name__)

Scalar = Union[int, FFElem]


class Poly:
    """Univariate polynomial over a FieldCtx, coefficients stored as codes from low to high degree."""
    __slots__ = ('ctx', 'codes')

    def __init__(self, ctx: FieldCtx, codes: Iterable[int]):
        codes = list(codes)
        while codes and codes[-1] == 0:
            codes.pop()
        self.ctx = ctx
        self.codes: Tuple[int, ...] = tuple(codes)

    # construction

    @staticmethod
    def zero(ctx: FieldCtx) -> 'Poly':
        return Poly(ctx, ())

    @staticmethod
    def one(ctx: FieldCtx) -> 'Poly':
        return Poly(ctx, (1,))

    @staticmethod
    def t(ctx: FieldCtx) -> 'Poly':
        return Poly(ctx, (0, 1))

    @staticmethod
    def monomial(ctx: FieldCtx, degree: int, coefficient: Scalar = 1) -> 'Poly':
        return Poly(ctx, [0] * degree + [_code(ctx, coefficient)])

    @staticmethod
    def constant(ctx: FieldCtx, value: Scalar) -> 'Poly':
        return Poly(ctx, (_code(ctx, value),))

    @staticmethod
    def from_ints(ctx: FieldCtx, coefficients: Sequence[int]) -> 'Poly':
        """Integer coefficients (low to high) reduced into the prime field."""
        return Poly(ctx, [ctx.from_int(c) for c in coefficients])

    @staticmethod
    def from_elems(ctx: FieldCtx, coefficients: Sequence[Scalar]) -> 'Poly':
        return Poly(ctx, [_code(ctx, c) for c in coefficients])

    @staticmethod
    def from_roots(ctx: FieldCtx, roots: Iterable[Scalar]) -> 'Poly':
        result = Poly.one(ctx)
        for root in roots:
            result = result * Poly(ctx, (ctx.neg(_code(ctx, root)), 1))
        return result

    # inspection

    @property
    def degree(self) -> int:
        return len(self.codes) - 1

    @property
    def coefficients(self) -> List[FFElem]:
        return [FFElem(self.ctx, code) for code in self.codes]

    def coefficient(self, i: int) -> FFElem:
        return FFElem(self.ctx, self.codes[i] if i < len(self.codes) else 0)

    def is_zero(self) -> bool:
        return not self.codes

    def is_one(self) -> bool:
        return self.codes == (1,)

    def leading(self) -> int:
        if not self.codes:
            raise ZeroPolynomial('Leading coefficient')
        return self.codes[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and other.ctx is self.ctx and other.codes == self.codes

    def __hash__(self):
        return hash((id(self.ctx), self.codes))

    def __repr__(self):
        if not self.codes:
            return '0'
        terms = []
        for i in range(len(self.codes) - 1, -1, -1):
            code = self.codes[i]
            if code == 0:
                continue
            text = self.ctx.format(code)
            if '+' in text:
                text = f'({text})'
            power = '' if i == 0 else ('t' if i == 1 else f't^{i}')
            if i > 0 and code == 1:
                terms.append(power)
            else:
                terms.append(f'{text}{"*" if power else ""}{power}')
        return ' + '.join(terms)

    def to_jsonnable(self):
        return [list(self.ctx.digits(code)) for code in self.codes]

    # arithmetic

    def _lift(self, other) -> 'Poly':
        if isinstance(other, Poly):
            return other
        return Poly.constant(self.ctx, other)

    def __add__(self, other):
        other = self._lift(other)
        ctx, a, b = self.ctx, self.codes, other.codes
        length = max(len(a), len(b))
        return Poly(ctx, [ctx.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(length)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ctx, [self.ctx.neg(c) for c in self.codes])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            scalar = _code(self.ctx, other)
            return Poly(self.ctx, [self.ctx.mul(scalar, c) for c in self.codes])
        ctx, a, b = self.ctx, self.codes, other.codes
        if not a or not b:
            return Poly.zero(ctx)
        product = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        product[i + j] = ctx.add(product[i + j], ctx.mul(ai, bj))
        return Poly(ctx, product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'Poly':
        result, base = Poly.one(self.ctx), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: 'Poly') -> Tuple['Poly', 'Poly']:
        if other.is_zero():
            raise ZeroPolynomial('Division')
        ctx = self.ctx
        remainder = list(self.codes)
        divisor = other.codes
        dd = len(divisor) - 1
        inv_lead = ctx.inv(divisor[-1])
        if len(remainder) - 1 < dd:
            return Poly.zero(ctx), self
        quotient = [0] * (len(remainder) - dd)
        for k in range(len(remainder) - 1, dd - 1, -1):
            coefficient = remainder[k]
            if not coefficient:
                continue
            factor = ctx.mul(coefficient, inv_lead)
            quotient[k - dd] = factor
            for i in range(dd + 1):
                if divisor[i]:
                    remainder[k - dd + i] = ctx.sub(remainder[k - dd + i], ctx.mul(factor, divisor[i]))
        return Poly(ctx, quotient), Poly(ctx, remainder[:dd])

    def __floordiv__(self, other: 'Poly') -> 'Poly':
        return divmod(self, other)[0]

    def __mod__(self, other: 'Poly') -> 'Poly':
        return divmod(self, other)[1]

    def divides(self, other: 'Poly') -> bool:
        return (other % self).is_zero()

    def exact_div(self, other: 'Poly') -> 'Poly':
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise ArithmeticError(f'{other} does not divide {self}')
        return quotient

    def monic(self) -> 'Poly':
        if self.is_zero():
            raise ZeroPolynomial('Normalization')
        inv_lead = self.ctx.inv(self.codes[-1])
        return Poly(self.ctx, [self.ctx.mul(inv_lead, c) for c in self.codes])

    def derivative(self) -> 'Poly':
        ctx = self.ctx
        return Poly(ctx, [ctx.scale(i, c) for i, c in enumerate(self.codes)][1:])

    def evaluate(self, x: Scalar) -> FFElem:
        ctx = self.ctx
        point = _code(ctx, x)
        value = 0
        for code in reversed(self.codes):
            value = ctx.add(ctx.mul(value, point), code)
        return FFElem(ctx, value)

    __call__ = evaluate

    def pow_mod(self, e: int, modulus: 'Poly') -> 'Poly':
        result, base = Poly.one(self.ctx) % modulus, self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def map_coefficients(self, fn) -> 'Poly':
        return Poly(self.ctx, [fn(c) for c in self.codes])

    def frobenius_q(self) -> 'Poly':
        return self.map_coefficients(self.ctx.frob_q)


def _code(ctx: FieldCtx, value: Scalar) -> int:
    if isinstance(value, FFElem):
        if value.ctx is not ctx:
            raise ValueError(f'Element of {value.ctx} used in {ctx}')
        return value.code
    return ctx.from_int(value)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is 0."""
    while not g.is_zero():
        f, g = g, f % g
    return f if f.is_zero() else f.monic()


def xgcd(f: Poly, g: Poly) -> Tuple[Poly, Poly, Poly]:
    """(d, u, v) with u*f + v*g = d = gcd(f, g) monic."""
    ctx = f.ctx
    r0, r1 = f, g
    s0, s1 = Poly.one(ctx), Poly.zero(ctx)
    t0, t1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero():
        quotient, remainder = divmod(r0, r1)
        r0, r1 = r1, remainder
        s0, s1 = s1, s0 - quotient * s1
        t0, t1 = t1, t0 - quotient * t1
    if r0.is_zero():
        return r0, s0, t0
    inv_lead = ctx.inv(r0.leading())
    return r0 * FFElem(ctx, inv_lead), s0 * FFElem(ctx, inv_lead), t0 * FFElem(ctx, inv_lead)


def lcm(f: Poly, g: Poly) -> Poly:
    return ((f * g) // gcd(f, g)).monic()


# factorization over the context field

def _pth_root(f: Poly) -> Poly:
    """The polynomial g with g^p = f, for f whose exponents are all multiples of p."""
    ctx = f.ctx
    p, root_exponent = ctx.p, ctx.order // ctx.p
    return Poly(ctx, [ctx.pow(f.codes[i], root_exponent) for i in range(0, len(f.codes), p)])


def squarefree_decomposition(f: Poly) -> List[Tuple[Poly, int]]:
    """Pairs (g_i, i) of squarefree, pairwise coprime monic g_i with f = lc * prod g_i^i."""
    if f.is_zero():
        raise ZeroPolynomial('Squarefree decomposition')
    f = f.monic()
    if f.degree < 1:
        return []
    result: List[Tuple[Poly, int]] = []
    derivative = f.derivative()
    if derivative.is_zero():
        return [(g, k * f.ctx.p) for g, k in squarefree_decomposition(_pth_root(f))]
    c = gcd(f, derivative)
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        factor = w // y
        if factor.degree > 0:
            result.append((factor.monic(), i))
        i += 1
        w, c = y, c // y
    if c.degree > 0:
        result.extend((g, k * f.ctx.p) for g, k in squarefree_decomposition(_pth_root(c.monic())))
    return sorted(result, key=lambda pair: (pair[1], pair[0].degree, pair[0].codes))


def distinct_degree_factorization(f: Poly) -> List[Tuple[Poly, int]]:
    """For squarefree monic f: pairs (g, i) where g is the product of the degree-i irreducible factors."""
    ctx = f.ctx
    result = []
    remaining = f
    t = Poly.t(ctx)
    h = t % remaining
    i = 1
    while remaining.degree >= 2 * i:
        h = h.pow_mod(ctx.order, remaining)
        g = gcd(remaining, h - t)
        if not g.is_one():
            result.append((g, i))
            remaining = remaining // g
            h = h % remaining
        i += 1
    if remaining.degree > 0:
        result.append((remaining.monic(), remaining.degree))
    return result


def _random_poly(ctx: FieldCtx, degree_below: int, rng: Random) -> Poly:
    return Poly(ctx, [rng.randrange(ctx.order) for _ in range(degree_below)])


def equal_degree_factorization(g: Poly, degree: int, rng: Random) -> List[Poly]:
    """Split a squarefree monic product of degree-`degree` irreducibles (Cantor-Zassenhaus)."""
    if g.degree == degree:
        return [g]
    ctx = g.ctx
    while True:
        r = _random_poly(ctx, g.degree, rng)
        if r.degree < 1:
            continue
        if ctx.p == 2:
            # absolute trace to GF(2) of r in GF(Q^degree)[t]/(g)
            b, power = r % g, r % g
            for _ in range(ctx.d * degree - 1):
                power = (power * power) % g
                b = b + power
        else:
            b = r.pow_mod((ctx.order ** degree - 1) // 2, g) - Poly.one(ctx)
        h = gcd(g, b)
        if 0 < h.degree < g.degree:
            return (equal_degree_factorization(h, degree, rng)
                    + equal_degree_factorization(g // h, degree, rng))


def factor(f: Poly, seed: int = 0) -> List[Tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, sorted by (degree, codes)."""
    rng = Random(seed)
    result = []
    for squarefree, multiplicity in squarefree_decomposition(f):
        for product, degree in distinct_degree_factorization(squarefree):
            for irreducible in equal_degree_factorization(product, degree, rng):
                result.append((irreducible.monic(), multiplicity))
    return sorted(result, key=lambda pair: (pair[0].degree, pair[0].codes, pair[1]))


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    factors = factor(f)
    return len(factors) == 1 and factors[0][1] == 1


def _linear_part_roots(f: Poly, rng: Random) -> List[int]:
    ctx = f.ctx
    t = Poly.t(ctx)
    linear = gcd(f, t.pow_mod(ctx.order, f) - t)
    if linear.degree < 1:
        return []
    return [ctx.neg(h.codes[0]) for h in equal_degree_factorization(linear, 1, rng)]


def _multiplicity(f: Poly, root: int) -> int:
    ctx = f.ctx
    linear = Poly(ctx, (ctx.neg(root), 1))
    count = 0
    while not f.is_zero() and f.degree >= 1:
        quotient, remainder = divmod(f, linear)
        if not remainder.is_zero():
            break
        f = quotient
        count += 1
    return count


def roots_in_field(f: Poly, brute_force_bound: Optional[int] = None) -> List[Tuple[FFElem, int]]:
    """Roots of f in its context field with multiplicities, sorted by code."""
    if f.is_zero():
        raise ZeroPolynomial('Root finding')
    ctx = f.ctx
    if brute_force_bound is None:
        brute_force_bound = ConfigHelper.get_instance().brute_force_roots_bound
    if ctx.order <= brute_force_bound:
        roots = [code for code in ctx.codes() if f.evaluate(ctx.element(code)).is_zero()]
    else:
        roots = _linear_part_roots(f, Random(0))
    return [(FFElem(ctx, root), _multiplicity(f, root)) for root in sorted(roots)]


def roots_by_enumeration(f: Poly) -> List[FFElem]:
    return [x for x in f.ctx.elements() if f.evaluate(x).is_zero()]


def minimal_polynomial_over_prime_field(x: FFElem) -> Poly:
    """Minimal polynomial of x over GF(p), as a Poly of the same context with prime-field coefficients."""
    ctx = x.ctx
    conjugates = [x.code]
    current = ctx.pow(x.code, ctx.p)
    while current != x.code:
        conjugates.append(current)
        current = ctx.pow(current, ctx.p)
    return Poly.from_roots(ctx, [FFElem(ctx, code) for code in conjugates])


# orders of roots

@dataclass
class MultOrder:
    order: int
    bound: Optional[int] = None

    @property
    def divides_bound(self) -> Optional[bool]:
        return None if self.bound is None else self.bound % self.order == 0


def mult_order(x: FFElem, bound: Optional[int] = None) -> MultOrder:
    if x.is_zero():
        raise ZeroElement('Multiplicative order')
    return MultOrder(order=x.multiplicative_order(), bound=bound)


def has_root_of_order_dividing(f: Poly, k: int) -> bool:
    """True iff some root of f, in any extension, has multiplicative order dividing k."""
    ctx = f.ctx
    t_power = Poly.t(ctx).pow_mod(k, f)
    return gcd(f, t_power - Poly.one(ctx)).degree > 0


@dataclass
class ClauseReport:
    passed: bool
    first_violated: Optional[str] = None
    values: dict = field(default_factory=dict)


def order48_clauses(gamma: FFElem) -> List[Tuple[str, FFElem]]:
    """The nonvanishing clauses on gamma; all hold iff no root of t^2+gamma*t+1 has order dividing 48."""
    g2 = gamma * gamma
    g4 = g2 * g2
    clauses = [(f'gamma{j:+d} != 0', gamma + j) for j in (0, 1, -1, 2, -2)]
    clauses += [(f'gamma^2-{j} != 0', g2 - j) for j in (2, 3)]
    clauses += [(f'gamma^4-4gamma^2+{j} != 0', g4 - 4 * g2 + j) for j in (1, 2)]
    clauses.append(('gamma^8-8gamma^6+20gamma^4-16gamma^2+1 != 0',
                    g4 * g4 - 8 * g4 * g2 + 20 * g4 - 16 * g2 + 1))
    return clauses


def order48_conditions(gamma: FFElem) -> ClauseReport:
    for name, value in order48_clauses(gamma):
        if value.is_zero():
            return ClauseReport(passed=False, first_violated=name)
    return ClauseReport(passed=True)


def order48_direct(gamma: FFElem) -> bool:
    """Direct form of order48_conditions: no root of t^2 + gamma t + 1 has order dividing 48."""
    ctx = gamma.ctx
    quadratic = Poly(ctx, (1, gamma.code, 1))
    return not has_root_of_order_dividing(quadratic, 48)


# admissible root counts

G1 = 'g1'
G2 = 'g2'


def admissible_polynomial(ctx: FieldCtx, kind: str, kappa: int = 3) -> Poly:
    q = ctx.q
    if kind == G1:
        return Poly.monomial(ctx, q + 1) - kappa
    if kind == G2:
        return Poly.monomial(ctx, q + 1) + Poly.monomial(ctx, q) + Poly.t(ctx)
    raise ValueError(f'Unknown kind {kind}')


def _admissible(kind: str, alpha: FFElem) -> bool:
    if kind == G1:
        return (alpha ** 3).generates_field()
    return alpha.generates_field()


def count_admissible_roots(ctx: FieldCtx, kind: str, kappa: int = 3,
                           enumeration_bound: Optional[int] = None) -> int:
    """Roots alpha of g1 = t^{q+1} - kappa with GF(p)[alpha^3] = GF(q^2), or of
    g2 = t^{q+1} + t^q + t with GF(p)[alpha] = GF(q^2)."""
    if enumeration_bound is None:
        enumeration_bound = ConfigHelper.get_instance().enumeration_bound
    if ctx.order > enumeration_bound:
        raise FieldTooLarge(ctx.order, enumeration_bound)
    if kind == G1 and ctx.from_int(kappa) == 0:
        raise ValueError(f'kappa={kappa} vanishes in characteristic {ctx.p}')
    polynomial = admissible_polynomial(ctx, kind, kappa)
    roots = roots_in_field(polynomial)
    return sum(1 for alpha, _ in roots if _admissible(kind, alpha))


def count_admissible_roots_by_enumeration(ctx: FieldCtx, kind: str, kappa: int = 3) -> int:
    polynomial = admissible_polynomial(ctx, kind, kappa)
    return sum(1 for alpha in ctx.elements() if polynomial.evaluate(alpha).is_zero() and _admissible(kind, alpha))


def admissible_count_bound(q: int, p: int, f: int, kind: str) -> int:
    """Lower bound for the admissible root count depending on the shape of f."""
    if f & (f - 1) == 0:
        return q - 5 if kind == G1 else q - 1
    factors = factor_integer(f)
    if len(factors) == 1 and f in factors:
        return q - 3 * p - 8 if kind == G1 else q - p
    odd_primes = sorted(prime for prime in factors if prime != 2)
    f_bar = f // odd_primes[0]
    return p ** (3 * f_bar - 1)
