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

"""Finite fields GF(p^d) realized as GF(p)[t]/(m(t)).

Elements are encoded as integers: the code of c_0 + c_1 t + ... + c_{d-1} t^{d-1} is
sum(c_i * p^i). Code order is the lexicographic order used everywhere for "smallest" choices.

Fields up to the configured table bound carry exp/log/Zech tables so that every operation is a
couple of list lookups; larger fields fall back to digit arithmetic.
"""
import logging
from functools import lru_cache
from math import gcd
from typing import Iterator, List, Optional, Sequence, Tuple

from su23.algebra.integers import (factor_integer, factor_power_minus_one,
                                   is_prime, prime_power)
from su23.common.config_helper import ConfigHelper
from su23.exceptions.exceptions import (DegreeZero, FieldTooLarge, NotPrime,
                                        OddDegreeContext, ZeroElement)

logger = logging.getLogger(__name__)


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _prime_poly_mod(a: List[int], m: Sequence[int], p: int) -> List[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        coefficient = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coefficient * mi) % p
        _trim(a)
    return a


def _prime_poly_mulmod(a: List[int], b: List[int], m: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    product = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                product[i + j] += ai * bj
    return _prime_poly_mod(product, m, p)


def _prime_poly_powmod(a: List[int], e: int, m: Sequence[int], p: int) -> List[int]:
    result = [1]
    base = _prime_poly_mod(list(a), m, p)
    while e:
        if e & 1:
            result = _prime_poly_mulmod(result, base, m, p)
        base = _prime_poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _prime_poly_gcd(a: List[int], b: List[int], p: int) -> List[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _prime_poly_mod(a, b, p)
    return a


def _prime_poly_sub(a: List[int], b: List[int], p: int) -> List[int]:
    length = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(length)])


def is_irreducible_over_prime_field(m: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic m (low-to-high coefficients) over GF(p)."""
    d = len(m) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    t = [0, 1]
    if _prime_poly_sub(_prime_poly_powmod(t, p ** d, m, p), t, p):
        return False
    for r in factor_integer(d):
        h = _prime_poly_sub(_prime_poly_powmod(t, p ** (d // r), m, p), t, p)
        if len(_prime_poly_gcd(list(m), h, p)) - 1 > 0:
            return False
    return True



class FieldCtx:
    """GF(p^d) with a fixed monic irreducible modulus over GF(p)."""

    def __init__(self, p: int, d: int, modulus: Sequence[int], table_bound: Optional[int] = None):
        self.p = p
        self.d = d
        self.order = p ** d
        self.modulus: Tuple[int, ...] = tuple(modulus)
        self.f: Optional[int] = d // 2 if d % 2 == 0 else None
        self.q: Optional[int] = p ** self.f if self.f is not None else None
        self._n = self.order - 1
        self._powers = [p ** i for i in range(d)]
        self._is_prime_field = d == 1
        self._char_two = p == 2
        self._exp: Optional[List[int]] = None
        self._log: Optional[List[int]] = None
        self._zech: Optional[List[int]] = None
        self.primitive_element = self._find_primitive_element()
        if table_bound is None:
            table_bound = ConfigHelper.get_instance().table_bound
        if self.order <= table_bound and not self._is_prime_field:
            self._build_tables()

    def __repr__(self):
        return f'GF({self.p}^{self.d})'

    # encoding

    def digits(self, code: int) -> List[int]:
        p = self.p
        result = []
        for _ in range(self.d):
            code, digit = divmod(code, p)
            result.append(digit)
        return result

    def from_digits(self, digits: Sequence[int]) -> int:
        code = 0
        for i in range(len(digits) - 1, -1, -1):
            code = code * self.p + digits[i] % self.p
        return code

    def from_int(self, k: int) -> int:
        return k % self.p

    def element(self, code: int) -> 'FFElem':
        return FFElem(self, code)

    def elem(self, k: int) -> 'FFElem':
        return FFElem(self, self.from_int(k))

    def codes(self) -> Iterator[int]:
        return iter(range(self.order))

    def elements(self) -> Iterator['FFElem']:
        return (FFElem(self, code) for code in range(self.order))

    def generator_t(self) -> 'FFElem':
        """The residue class of t, the root of the modulus."""
        return FFElem(self, self.p if self.d > 1 else (-self.modulus[0]) % self.p)

    def format(self, code: int) -> str:
        if self._is_prime_field:
            return str(code)
        terms = []
        for i, c in reversed(list(enumerate(self.digits(code)))):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = 'z' if i == 1 else f'z^{i}'
                terms.append(power if c == 1 else f'{c}{power}')
        return '+'.join(terms) if terms else '0'

    # arithmetic on codes

    def add(self, a: int, b: int) -> int:
        if self._char_two:
            return a ^ b
        if self._is_prime_field:
            return (a + b) % self.p
        if not a:
            return b
        if not b:
            return a
        if self._exp is None:
            return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self._n]
        if z < 0:
            return 0
        return self._exp[(la + z) % self._n]

    def neg(self, a: int) -> int:
        if self._char_two or not a:
            return a
        if self._is_prime_field:
            return self.p - a
        if self._exp is None:
            return self.from_digits([-x for x in self.digits(a)])
        return self._exp[(self._log[a] + self._n // 2) % self._n]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._is_prime_field:
            return a * b % self.p
        if self._exp is None:
            return self._mul_slow(a, b)
        return self._exp[(self._log[a] + self._log[b]) % self._n]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroElement('Inversion')
        if self._is_prime_field:
            return pow(a, self.p - 2, self.p)
        if self._exp is None:
            return self._pow_slow(a, self._n - 1)
        return self._exp[(-self._log[a]) % self._n]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if k == 0:
            return 1
        if not a:
            return 0
        if self._is_prime_field:
            return pow(a, k, self.p)
        if self._exp is None:
            return self._pow_slow(a, k % self._n or self._n)
        return self._exp[(self._log[a] * k) % self._n]

    def scale(self, k: int, a: int) -> int:
        return self.mul(self.from_int(k), a)

    def sum(self, values) -> int:
        total = 0
        for value in values:
            total = self.add(total, value)
        return total

    # q-power structure of GF(q^2)

    def _require_even(self):
        if self.q is None:
            raise OddDegreeContext(self)

    def frob_q(self, a: int) -> int:
        self._require_even()
        return self.pow(a, self.q)

    def norm(self, a: int) -> int:
        self._require_even()
        return self.pow(a, self.q + 1)

    def trace_q(self, a: int) -> int:
        self._require_even()
        return self.add(a, self.pow(a, self.q))

    def in_gfq(self, a: int) -> bool:
        return self.frob_q(a) == a

    # subfields and orders

    def in_proper_subfield(self, a: int) -> bool:
        for r in factor_integer(self.d):
            if self.pow(a, self.p ** (self.d // r)) == a:
                return True
        return False

    def generates_field(self, a: int) -> bool:
        """True iff 1, a, ..., a^{d-1} span GF(p^d) over GF(p), i.e. GF(p)[a] is the whole field."""
        rows, power = [], 1
        for _ in range(self.d):
            rows.append(self.digits(power))
            power = self.mul(power, a)
        return _rank_mod_p(rows, self.p) == self.d

    def multiplicative_order(self, a: int) -> int:
        if not a:
            raise ZeroElement('Multiplicative order')
        if self._exp is not None:
            return self._n // gcd(self._log[a], self._n)
        order = self._n
        for prime in self._group_order_factors():
            while order % prime == 0 and self.pow(a, order // prime) == 1:
                order //= prime
        return order

    def elements_of_order(self, k: int) -> List[int]:
        """All elements of multiplicative order k, sorted by code."""
        if self._n % k:
            return []
        base = self.pow(self.primitive_element, self._n // k)
        return sorted(self.pow(base, j) for j in range(1, k + 1) if gcd(j, k) == 1)

    def discrete_log(self, a: int) -> int:
        if not a:
            raise ZeroElement('Discrete logarithm')
        if self._exp is not None:
            return self._log[a]
        power, k = 1, 0
        while power != a:
            power = self.mul(power, self.primitive_element)
            k += 1
        return k

    # construction

    def _group_order_factors(self) -> List[int]:
        return sorted(factor_power_minus_one(self.p, self.d))

    def _mul_slow(self, a: int, b: int) -> int:
        product = _prime_poly_mulmod(self.digits(a), self.digits(b), self.modulus, self.p)
        return self.from_digits(product)

    def _pow_slow(self, a: int, k: int) -> int:
        return self.from_digits(_prime_poly_powmod(self.digits(a), k, self.modulus, self.p))

    def _candidate_generators(self) -> Iterator[int]:
        if self._is_prime_field:
            yield from range(1, self.p)
            return
        # t + c first: multiplying by a linear element is a shift, which keeps table building linear
        yield from (self.p + c for c in range(self.p))
        yield from range(2, self.order)

    def _find_primitive_element(self) -> int:
        if self.order == 2:
            return 1
        primes = self._group_order_factors()
        for candidate in self._candidate_generators():
            if all(self._pow_generic(candidate, self._n // prime) != 1 for prime in primes):
                return candidate
        raise AssertionError(f'{self} has no primitive element')

    def _pow_generic(self, a: int, k: int) -> int:
        if self._is_prime_field:
            return pow(a, k, self.p)
        return self._pow_slow(a, k)

    def _times_generator(self, current: List[int], generator: List[int], linear: bool) -> List[int]:
        p, m = self.p, self.modulus
        if not linear:
            return _pad(_prime_poly_mulmod(current, generator, m, p), self.d)
        overflow = current[-1]
        shifted = [0] + current[:-1]
        if overflow:
            for i in range(self.d):
                shifted[i] = (shifted[i] - overflow * m[i]) % p
        c = generator[0]
        if c:
            shifted = [(s + c * x) % p for s, x in zip(shifted, current)]
        return shifted

    def _build_tables(self):
        n, d, p = self._n, self.d, self.p
        generator = self.digits(self.primitive_element)
        linear = generator[1] == 1 and all(x == 0 for x in generator[2:])
        exp = [0] * n
        log = [-1] * self.order
        current = [1] + [0] * (d - 1)
        for k in range(n):
            code = self.from_digits(current)
            exp[k] = code
            log[code] = k
            current = self._times_generator(current, generator, linear)
        self._exp, self._log = exp, log
        if p != 2:
            zech = [-1] * n
            for k in range(n):
                code = exp[k]
                low = code % p
                plus_one = code - low + (low + 1) % p
                zech[k] = log[plus_one] if plus_one else -1
            self._zech = zech
        logger.debug(f'Built log tables for {self}')


def _pad(digits: List[int], d: int) -> List[int]:
    return list(digits) + [0] * (d - len(digits))


def _rank_mod_p(rows: List[List[int]], p: int) -> int:
    rows = [list(row) for row in rows]
    rank, cols = 0, len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                factor = rows[i][col]
                rows[i] = [(x - factor * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


class FFElem:
    """Element of a FieldCtx; a thin operator-overloading view over an integer code."""
    __slots__ = ('ctx', 'code')

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(self.ctx.digits(self.code))

    def _coerce(self, other) -> int:
        if isinstance(other, FFElem):
            if other.ctx is not self.ctx:
                raise ValueError(f'Mixing elements of {self.ctx} and {other.ctx}')
            return other.code
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def _wrap(self, code: int) -> 'FFElem':
        return FFElem(self.ctx, code)

    def __add__(self, other):
        code = self._coerce(other)
        return NotImplemented if code is NotImplemented else self._wrap(self.ctx.add(self.code, code))

    __radd__ = __add__

    def __sub__(self, other):
        code = self._coerce(other)
        return NotImplemented if code is NotImplemented else self._wrap(self.ctx.sub(self.code, code))

    def __rsub__(self, other):
        code = self._coerce(other)
        return NotImplemented if code is NotImplemented else self._wrap(self.ctx.sub(code, self.code))

    def __mul__(self, other):
        code = self._coerce(other)
        return NotImplemented if code is NotImplemented else self._wrap(self.ctx.mul(self.code, code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        code = self._coerce(other)
        return NotImplemented if code is NotImplemented else self._wrap(self.ctx.div(self.code, code))

    def __rtruediv__(self, other):
        code = self._coerce(other)
        return NotImplemented if code is NotImplemented else self._wrap(self.ctx.div(code, self.code))

    def __neg__(self):
        return self._wrap(self.ctx.neg(self.code))

    def __pow__(self, k: int):
        return self._wrap(self.ctx.pow(self.code, k))

    def __eq__(self, other):
        if isinstance(other, FFElem):
            return other.ctx is self.ctx and other.code == self.code
        if isinstance(other, int):
            return self.code == self.ctx.from_int(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((id(self.ctx), self.code))

    def __lt__(self, other: 'FFElem'):
        return self.code < other.code

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return self.ctx.format(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def inverse(self) -> 'FFElem':
        return self._wrap(self.ctx.inv(self.code))

    def frobenius_q(self) -> 'FFElem':
        return self._wrap(self.ctx.frob_q(self.code))

    def norm(self) -> 'FFElem':
        return self._wrap(self.ctx.norm(self.code))

    def trace_q(self) -> 'FFElem':
        return self._wrap(self.ctx.trace_q(self.code))

    def in_gfq(self) -> bool:
        return self.ctx.in_gfq(self.code)

    def generates_field(self) -> bool:
        return self.ctx.generates_field(self.code)

    def in_proper_subfield(self) -> bool:
        return self.ctx.in_proper_subfield(self.code)

    def multiplicative_order(self) -> int:
        return self.ctx.multiplicative_order(self.code)

    def to_jsonnable(self):
        return list(self.coeffs)


def frobenius_q(x: FFElem) -> FFElem:
    return x.frobenius_q()


def norm_to_gfq(x: FFElem) -> FFElem:
    return x.norm()


def lex_smallest_irreducible(p: int, d: int) -> Tuple[int, ...]:
    """Monic irreducible of degree d over GF(p) with the smallest code c_0 + c_1 p + ... ."""
    for code in range(p ** d):
        lower = []
        for _ in range(d):
            code, digit = divmod(code, p)
            lower.append(digit)
        candidate = tuple(lower) + (1,)
        if is_irreducible_over_prime_field(candidate, p):
            return candidate
    raise AssertionError(f'No irreducible polynomial of degree {d} over GF({p})')


@lru_cache(maxsize=None)
def _make_field_cached(p: int, d: int) -> FieldCtx:
    modulus = lex_smallest_irreducible(p, d)
    ctx = FieldCtx(p, d, modulus)
    logger.debug(f'Constructed {ctx} with modulus {modulus}')
    return ctx


def make_field(p: int, d: int, bound: Optional[int] = None) -> FieldCtx:
    """The field GF(p^d); repeated calls return the same context object."""
    if not is_prime(p):
        raise NotPrime(p)
    if d < 1:
        raise DegreeZero(d)
    if bound is None:
        bound = ConfigHelper.get_instance().construction_bound
    if p ** d > bound:
        raise FieldTooLarge(p ** d, bound)
    return _make_field_cached(p, d)


def make_quadratic_extension(q: int) -> FieldCtx:
    """GF(q^2) for a prime power q."""
    decomposition = prime_power(q)
    if decomposition is None:
        raise NotPrime(q)
    p, f = decomposition
    return make_field(p, 2 * f)
