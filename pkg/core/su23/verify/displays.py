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
"""Closed-form vectors, characteristic polynomials and determinants that the suites compare against.

Vectors are lists of element codes. Eigenvector displays for the commutator are written in terms of the
eigenvalue lam itself, so no square roots are needed: for p = 3 the term +-(a-1)sqrt(a^2-a-1) equals
lam(a+1) - a^2.
"""
from typing import List, Sequence

from su23.algebra.ff import FFElem
from su23.algebra.linalg import Vector
from su23.algebra.poly import Poly, roots_in_field
from su23.gens.param_derived import ParamDerived


def _codes(values: Sequence) -> Vector:
    return [value.code for value in values]


def last_nine(n: int, values: Sequence[FFElem]) -> Vector:
    """(0, ..., 0, values) with the nine values on e_{n-8}, ..., e_n."""
    return [0] * (n - 9) + _codes(values)


def last_four(n: int, values: Sequence[FFElem]) -> Vector:
    return [0] * (n - 4) + _codes(values)


def commutator_charpoly_on_s(a: FFElem) -> Poly:
    """(t-1)(t+1) chi_0(t) for the restriction of [x,y] to <S>."""
    ctx = a.ctx
    t = Poly.t(ctx)
    if ctx.p == 3:
        norm = a.norm()
        chi0 = (t - 1) * (t - 1) * Poly.from_elems(ctx, [1, -norm, 1])
    else:
        d = ParamDerived.from_a(a)
        outer = (d.c + 2) * (d.gamma - d.c * d.c) / (d.c * d.c)
        middle = (d.gamma + 2 * d.c) / d.c
        chi0 = Poly.from_elems(ctx, [1, outer, middle, outer, 1])
    return (t - 1) * (t + 1) * chi0


def sigma_polynomial(a: FFElem) -> Poly:
    """The quadratic factor of chi_0 whose roots are sigma and 1/sigma."""
    ctx = a.ctx
    if ctx.p == 3:
        return Poly.from_elems(ctx, [1, -a.norm(), 1])
    return Poly.from_elems(ctx, [1, ParamDerived.from_a(a).gamma, 1])


def sigma_roots(a: FFElem) -> List[FFElem]:
    """Roots of sigma_polynomial in GF(q^2) with multiplicity, smallest code first."""
    return [root for root, multiplicity in roots_in_field(sigma_polynomial(a)) for _ in range(multiplicity)]


def fixed_vector(n: int, a: FFElem) -> Vector:
    """Spans the fixed space of [x,y] on <S>."""
    if a.ctx.p == 3:
        one, s = a.ctx.elem(1), a + 1
        return last_nine(n, [0 * a, s, 0 * a, 0 * a, one, s, s, -one, -one])
    a3 = a ** 3 - 6
    zero = 0 * a
    return last_nine(n, [zero, a3, zero, zero, a, a3, a3, 2 * a * a, 4 * a])


def s_sigma(n: int, a: FFElem, lam: FFElem) -> Vector:
    """Eigenvector of [x,y] for the eigenvalue lam in {sigma, 1/sigma}."""
    zero, one = 0 * a, a.ctx.elem(1)
    lam_inv = lam.inverse()
    if a.ctx.p == 3:
        root_term = lam * (a + 1) - a * a
        denominator = (a + 1) * (a + 1) * (a - 1)
        return last_nine(n, [zero, one, zero, zero, (a * a + 1) / (a * a - 1), lam, lam_inv,
                             (-a + a * root_term) / denominator, (-a - a * root_term) / denominator])
    d = ParamDerived.from_a(a)
    b_q_inv = d.b_q.inverse()
    return last_nine(n, [zero, one, zero, zero, (d.gamma + 1) * b_q_inv, lam, lam_inv,
                         -a * b_q_inv * (lam + 1), (d.gamma - 2) * b_q_inv])


def s_bar_sigma(n: int, a: FFElem, lam: FFElem) -> Vector:
    """Eigenvector of [x,y]^T for the eigenvalue lam in {sigma, 1/sigma}."""
    zero, one = 0 * a, a.ctx.elem(1)
    lam_inv = lam.inverse()
    if a.ctx.p == 3:
        root_term = (lam * (a + 1) - a * a) / (a - 1)
        base = a * (a + 1) * (a + 1) / (a - 1)
        return last_nine(n, [zero, one, zero, zero, -(a * a + a - 1) / (a - 1), lam_inv, lam,
                             base - a * root_term, base + a * root_term])
    d = ParamDerived.from_a(a)
    return last_nine(n, [zero, one, zero, zero, (d.gamma + 1) / d.b, lam_inv, lam,
                         3 * d.gamma * (lam - lam_inv) / (a * d.b),
                         d.gamma * (lam_inv - 2 * lam - 1) / d.b])


def difference_vector(n: int, a: FFElem) -> Vector:
    """w, proportional to s_sigma - s_{1/sigma}."""
    one = a.ctx.elem(1)
    if a.ctx.p == 3:
        e = a / (a * a - 1)
        return last_four(n, [one, -one, e, -e])
    d = ParamDerived.from_a(a)
    return last_four(n, [one, -one, -a / d.b_q, 0 * a])


# n = 8

def n8_psi(a: FFElem, sign: int) -> Poly:
    """Characteristic polynomial of x y^sign."""
    ctx = a.ctx
    zero, one = 0 * a, ctx.elem(1)
    if ctx.p == 3:
        ratio = a / (a + 1)
        if sign == 1:
            return Poly.from_elems(ctx, [one, ratio, -one, zero, zero, zero, -one, -a, one])
        return Poly.from_elems(ctx, [one, -a, -one, zero, zero, zero, -one, ratio, one])
    a3 = a ** 3
    k1 = (a3 + 1) / (3 * a * a)
    k2 = (a3 - 2) / (3 * a)
    k3 = (2 * a3 - 1) / (3 * a * a)
    k4 = (a3 + 1) / (3 * a)
    if sign == 1:
        return Poly.from_elems(ctx, [one, -k4, k3, zero, zero, zero, -k2, -k1, one])
    return Poly.from_elems(ctx, [one, -k1, -k2, zero, zero, zero, k3, -k4, one])


def n8_commutator_chi0(a: FFElem) -> Poly:
    """Cofactor of t^2 + t + 1 in the characteristic polynomial of [x,y], p != 3."""
    ctx = a.ctx
    d = ParamDerived.from_a(a)
    g = d.gamma / 9
    middle = (2 * d.gamma + 3 * d.b + 3 * d.b_q) / 9
    return Poly.from_elems(ctx, [1, -g, -g, middle, -g, -g, 1])


def s_omega(a: FFElem, w: FFElem) -> Vector:
    one = a.ctx.elem(1)
    w2 = w * w
    square = (a * a - a + 1) ** 2
    return _codes([one, w, -one, -w2, -w, w2,
                   3 * a * a * (2 * a - 1) * w / ((w - 1) * square),
                   3 * a * (2 * a - 1) / ((2 * w + 1) * square)])


def s_bar_omega(a: FFElem, w: FFElem) -> Vector:
    one = a.ctx.elem(1)
    w2 = w * w
    head = (a + 1) * (a + 1) * (2 - a)
    return _codes([one, w2, -one, -w, -w2, w, head / (3 * a * a), head * w / (3 * a)])


def s_one(a: FFElem) -> Vector:
    one, zero = a.ctx.elem(1), 0 * a
    return _codes([a, a.frobenius_q(), one, one, one, zero, zero, zero])


def s_bar_one(a: FFElem) -> Vector:
    one, zero = a.ctx.elem(1), 0 * a
    inv_q = a.frobenius_q().inverse()
    return _codes([one, -(a + 1), inv_q, inv_q, inv_q, zero, zero, zero])


def n8_det_m(a: FFElem) -> FFElem:
    if a.ctx.p == 3:
        return a ** 15 * (a - 1) / (a + 1) ** 9
    return 81 * a * (2 * a - 1) * (a + 1) ** 4 / (a * a - a + 1) ** 2


def n8_det_n(a: FFElem) -> FFElem:
    if a.ctx.p == 3:
        return -(a ** 7) * (a * a - 1)
    gamma = ParamDerived.from_a(a).gamma
    return -3 * gamma * (a + 1) ** 6 * (a - 2) / a ** 5


def n8_chi1_at_one(a: FFElem) -> FFElem:
    return -(a ** 13) * (a - 1) / (a + 1) ** 7


# n = 11

def n11_charpoly_xy(a: FFElem) -> Poly:
    ctx = a.ctx
    zero, one = 0 * a, ctx.elem(1)
    coefficients: List[FFElem] = [-one, zero, one, zero, -2 * one, a.frobenius_q() + 1, -(a + 1), 2 * one,
                                  zero, -one, zero, one]
    return Poly.from_elems(ctx, coefficients)
