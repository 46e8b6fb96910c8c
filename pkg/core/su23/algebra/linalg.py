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
from collections import deque
from random import Random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from su23.algebra.ff import FFElem, FieldCtx
from su23.algebra.poly import Poly, gcd, lcm
from su23.exceptions.exceptions import DimensionMismatch, NotInvertible, NotSquare

logger = logging.getLogger(__name__)

Vector = List[int]
Scalar = Union[int, FFElem]


def _code(ctx: FieldCtx, value: Scalar) -> int:
    if isinstance(value, FFElem):
        return value.code
    return ctx.from_int(value)


def vector(ctx: FieldCtx, values: Iterable[Scalar]) -> Vector:
    return [_code(ctx, value) for value in values]


def unit_vector(n: int, i: int) -> Vector:
    v = [0] * n
    v[i] = 1
    return v


def random_vector(ctx: FieldCtx, n: int, rng: Random) -> Vector:
    return [rng.randrange(ctx.order) for _ in range(n)]


def scale_vector(ctx: FieldCtx, s: int, v: Sequence[int]) -> Vector:
    return [ctx.mul(s, x) for x in v]


def add_vectors(ctx: FieldCtx, u: Sequence[int], v: Sequence[int]) -> Vector:
    return [ctx.add(x, y) for x, y in zip(u, v)]


def projectively_equal(ctx: FieldCtx, u: Sequence[int], v: Sequence[int]) -> bool:
    """u and v are nonzero and proportional."""
    pivot = next((i for i, x in enumerate(u) if x), None)
    if pivot is None or not v[pivot]:
        return False
    ratio = ctx.div(v[pivot], u[pivot])
    return all(ctx.mul(ratio, x) == y for x, y in zip(u, v))


def normalize_projective(ctx: FieldCtx, v: Sequence[int]) -> Tuple[int, ...]:
    """Scale v so that its first nonzero entry is 1."""
    pivot = next((i for i, x in enumerate(v) if x), None)
    if pivot is None:
        return tuple(v)
    inv = ctx.inv(v[pivot])
    return tuple(ctx.mul(inv, x) for x in v)


class Mat:
    """Dense matrix over a FieldCtx with rows of element codes.

    Vectors are plain lists of codes and are treated as columns: A.apply(v) is A v.
    """
    __slots__ = ('ctx', 'rows', 'nrows', 'ncols')

    def __init__(self, ctx: FieldCtx, rows: Sequence[Sequence[int]]):
        self.ctx = ctx
        self.rows: List[List[int]] = [list(row) for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(row) != self.ncols for row in self.rows):
            raise DimensionMismatch('Ragged rows')

    # construction

    @staticmethod
    def identity(ctx: FieldCtx, n: int) -> 'Mat':
        return Mat(ctx, [unit_vector(n, i) for i in range(n)])

    @staticmethod
    def zeros(ctx: FieldCtx, nrows: int, ncols: Optional[int] = None) -> 'Mat':
        return Mat(ctx, [[0] * (nrows if ncols is None else ncols) for _ in range(nrows)])

    @staticmethod
    def scalar(ctx: FieldCtx, n: int, value: Scalar) -> 'Mat':
        return Mat.identity(ctx, n) * value

    @staticmethod
    def from_ints(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> 'Mat':
        return Mat(ctx, [[ctx.from_int(x) for x in row] for row in rows])

    @staticmethod
    def from_elems(ctx: FieldCtx, rows: Sequence[Sequence[Scalar]]) -> 'Mat':
        return Mat(ctx, [vector(ctx, row) for row in rows])

    @staticmethod
    def from_columns(ctx: FieldCtx, columns: Sequence[Sequence[int]]) -> 'Mat':
        if not columns:
            return Mat(ctx, [])
        return Mat(ctx, [[column[i] for column in columns] for i in range(len(columns[0]))])

    @staticmethod
    def diagonal(ctx: FieldCtx, values: Sequence[Scalar]) -> 'Mat':
        n = len(values)
        return Mat(ctx, [[_code(ctx, values[i]) if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def block_diagonal(ctx: FieldCtx, blocks: Sequence['Mat']) -> 'Mat':
        n = sum(block.nrows for block in blocks)
        result = [[0] * n for _ in range(n)]
        offset = 0
        for block in blocks:
            for i, row in enumerate(block.rows):
                result[offset + i][offset:offset + block.ncols] = row
            offset += block.nrows
        return Mat(ctx, result)

    # inspection

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def n(self) -> int:
        self._require_square()
        return self.nrows

    def _require_square(self):
        if self.nrows != self.ncols:
            raise NotSquare(self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> FFElem:
        return FFElem(self.ctx, self.rows[i][j])

    def column(self, j: int) -> Vector:
        return [row[j] for row in self.rows]

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def __eq__(self, other):
        return isinstance(other, Mat) and other.ctx is self.ctx and other.rows == self.rows

    def __hash__(self):
        return hash((id(self.ctx), tuple(tuple(row) for row in self.rows)))

    def __repr__(self):
        width = max((len(self.ctx.format(x)) for row in self.rows for x in row), default=1)
        return '\n'.join('[' + ' '.join(self.ctx.format(x).rjust(width) for x in row) + ']' for row in self.rows)

    def is_identity(self) -> bool:
        return self.is_scalar_value(1)

    def is_scalar_value(self, value: int) -> bool:
        return all(x == (value if i == j else 0) for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def is_scalar(self) -> bool:
        self._require_square()
        return self.nrows == 0 or self.is_scalar_value(self.rows[0][0])

    def trace(self) -> FFElem:
        self._require_square()
        return FFElem(self.ctx, self.ctx.sum(self.rows[i][i] for i in range(self.nrows)))

    def to_jsonnable(self):
        return [[self.ctx.digits(x) for x in row] for row in self.rows]

    @staticmethod
    def from_jsonnable(ctx: FieldCtx, data) -> 'Mat':
        return Mat(ctx, [[ctx.from_digits(digits) for digits in row] for row in data])

    # arithmetic

    def __add__(self, other: 'Mat') -> 'Mat':
        self._check_same_shape(other)
        add = self.ctx.add
        return Mat(self.ctx, [[add(x, y) for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: 'Mat') -> 'Mat':
        self._check_same_shape(other)
        sub = self.ctx.sub
        return Mat(self.ctx, [[sub(x, y) for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> 'Mat':
        return Mat(self.ctx, [[self.ctx.neg(x) for x in row] for row in self.rows])

    def _check_same_shape(self, other: 'Mat'):
        if self.shape != other.shape:
            raise DimensionMismatch(f'Shapes {self.shape} and {other.shape} differ')

    def __mul__(self, other) -> 'Mat':
        if not isinstance(other, Mat):
            s = _code(self.ctx, other)
            return Mat(self.ctx, [[self.ctx.mul(s, x) for x in row] for row in self.rows])
        if self.ncols != other.nrows:
            raise DimensionMismatch(f'Cannot multiply {self.shape} by {other.shape}')
        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        other_rows = other.rows
        result = []
        for row in self.rows:
            accumulator = [0] * other.ncols
            for k, a in enumerate(row):
                if a:
                    other_row = other_rows[k]
                    if a == 1:
                        accumulator = [add(x, y) for x, y in zip(accumulator, other_row)]
                    else:
                        accumulator = [add(x, mul(a, y)) if y else x for x, y in zip(accumulator, other_row)]
            result.append(accumulator)
        return Mat(ctx, result)

    __matmul__ = __mul__

    def __rmul__(self, other) -> 'Mat':
        return self * other

    def __pow__(self, k: int) -> 'Mat':
        self._require_square()
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Mat.identity(self.ctx, self.nrows), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f'Vector of length {len(v)} for {self.shape} matrix')
        add, mul = self.ctx.add, self.ctx.mul
        result = []
        for row in self.rows:
            total = 0
            for a, x in zip(row, v):
                if a and x:
                    total = add(total, mul(a, x))
            result.append(total)
        return result

    @property
    def T(self) -> 'Mat':
        return Mat(self.ctx, [list(column) for column in zip(*self.rows)]) if self.rows else self

    def transpose(self) -> 'Mat':
        return self.T

    def psi(self) -> 'Mat':
        """Entrywise q-power map."""
        return Mat(self.ctx, [[self.ctx.frob_q(x) for x in row] for row in self.rows])

    def submatrix(self, row_indices: Sequence[int], col_indices: Optional[Sequence[int]] = None) -> 'Mat':
        col_indices = row_indices if col_indices is None else col_indices
        return Mat(self.ctx, [[self.rows[i][j] for j in col_indices] for i in row_indices])

    def leaves_invariant(self, indices: Sequence[int]) -> bool:
        """A maps span{e_i : i in indices} into itself."""
        inside = set(indices)
        return all(self.rows[i][j] == 0 for j in indices for i in range(self.nrows) if i not in inside)

    # elimination

    def det(self) -> FFElem:
        self._require_square()
        ctx = self.ctx
        rows = [list(row) for row in self.rows]
        n = self.nrows
        result = 1
        for col in range(n):
            pivot = next((i for i in range(col, n) if rows[i][col]), None)
            if pivot is None:
                return FFElem(ctx, 0)
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                result = ctx.neg(result)
            pivot_value = rows[col][col]
            result = ctx.mul(result, pivot_value)
            inv = ctx.inv(pivot_value)
            for i in range(col + 1, n):
                if rows[i][col]:
                    factor = ctx.mul(rows[i][col], inv)
                    rows[i] = [ctx.sub(x, ctx.mul(factor, y)) if y else x for x, y in zip(rows[i], rows[col])]
        return FFElem(ctx, result)

    def rref(self) -> Tuple['Mat', List[int]]:
        rows, pivots = _rref(self.ctx, self.rows, self.ncols)
        return Mat(self.ctx, rows), pivots

    def rank(self) -> int:
        return len(_rref(self.ctx, self.rows, self.ncols)[1])

    def nullspace(self) -> List[Vector]:
        ctx = self.ctx
        rows, pivots = _rref(ctx, self.rows, self.ncols)
        free = [j for j in range(self.ncols) if j not in set(pivots)]
        basis = []
        for f in free:
            v = [0] * self.ncols
            v[f] = 1
            for r, p in enumerate(pivots):
                v[p] = ctx.neg(rows[r][f])
            basis.append(v)
        return basis

    def inverse(self) -> 'Mat':
        self._require_square()
        ctx, n = self.ctx, self.nrows
        augmented = [list(row) + unit_vector(n, i) for i, row in enumerate(self.rows)]
        rows, pivots = _rref(ctx, augmented, n)
        if len(pivots) < n or pivots[n - 1] != n - 1:
            raise NotInvertible()
        return Mat(ctx, [row[n:] for row in rows[:n]])


def _rref(ctx: FieldCtx, rows: Sequence[Sequence[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Reduced row echelon form restricted to the first ncols columns as pivot candidates."""
    rows = [list(row) for row in rows]
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ctx.inv(rows[rank][col])
        if inv != 1:
            rows[rank] = [ctx.mul(inv, x) for x in rows[rank]]
        pivot_row = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [ctx.sub(x, ctx.mul(factor, y)) if y else x for x, y in zip(rows[i], pivot_row)]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows, pivots


# polynomial invariants

def _scaled(f: Poly, code: int) -> Poly:
    ctx = f.ctx
    return Poly(ctx, [ctx.mul(code, c) for c in f.codes])


def charpoly(A: Mat) -> Poly:
    """Characteristic polynomial det(tI - A) via reduction to upper Hessenberg form."""
    ctx, n = A.ctx, A.n
    H = [list(row) for row in A.rows]
    for m in range(1, n - 1):
        pivot = next((i for i in range(m, n) if H[i][m - 1]), None)
        if pivot is None:
            continue
        if pivot != m:
            H[m], H[pivot] = H[pivot], H[m]
            for row in H:
                row[m], row[pivot] = row[pivot], row[m]
        inv = ctx.inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = ctx.mul(H[i][m - 1], inv)
            if not u:
                continue
            H[i] = [ctx.sub(x, ctx.mul(u, y)) if y else x for x, y in zip(H[i], H[m])]
            for row in H:
                if row[i]:
                    row[m] = ctx.add(row[m], ctx.mul(u, row[i]))
    polys = [Poly.one(ctx)]
    for m in range(n):
        p = Poly(ctx, (ctx.neg(H[m][m]), 1)) * polys[m]
        product = 1
        for i in range(1, m + 1):
            product = ctx.mul(product, H[m - i + 1][m - i])
            if not product:
                break
            term = ctx.mul(product, H[m - i][m])
            if term:
                p = p - _scaled(polys[m - i], term)
        polys.append(p)
    return polys[n]


def invariant_factors(A: Mat) -> List[Poly]:
    """Nontrivial invariant factors of tI - A, each dividing the next.

    Smith normal form over GF(Q)[t]: the pivot is an entry of least degree (lowest column, then lowest row),
    rows and columns are reduced by division with remainder until the pivot divides the remaining block.
    """
    ctx, n = A.ctx, A.n
    M = [[Poly(ctx, (ctx.neg(A.rows[i][j]), 1) if i == j else (ctx.neg(A.rows[i][j]),))
          for j in range(n)] for i in range(n)]
    diagonal: List[Poly] = []
    for k in range(n):
        while True:
            best = None
            for j in range(k, n):
                for i in range(k, n):
                    entry = M[i][j]
                    if not entry.is_zero() and (best is None or entry.degree < best[0]):
                        best = (entry.degree, i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != k:
                M[k], M[pi] = M[pi], M[k]
            if pj != k:
                for row in M:
                    row[k], row[pj] = row[pj], row[k]
            pivot = M[k][k]
            reduced = True
            for i in range(k + 1, n):
                if M[i][k].is_zero():
                    continue
                quotient, remainder = divmod(M[i][k], pivot)
                M[i] = M[i][:k] + [x - quotient * y for x, y in zip(M[i][k:], M[k][k:])]
                reduced = reduced and remainder.is_zero()
            for j in range(k + 1, n):
                if M[k][j].is_zero():
                    continue
                quotient, remainder = divmod(M[k][j], pivot)
                for row in M[k:]:
                    row[j] = row[j] - quotient * row[k]
                reduced = reduced and remainder.is_zero()
            if not reduced:
                continue
            offender = next((i for i in range(k + 1, n) for j in range(k + 1, n)
                             if not pivot.divides(M[i][j])), None)
            if offender is None:
                break
            M[k] = M[k][:k] + [x + y for x, y in zip(M[k][k:], M[offender][k:])]
        diagonal.append(M[k][k].monic())
    return [d for d in diagonal if d.degree >= 1]


def minimal_polynomial_of_vector(A: Mat, v: Sequence[int]) -> Poly:
    """Monic generator of {f : f(A) v = 0}, from the first linear dependence in the Krylov sequence of v."""
    ctx = A.ctx
    basis: List[Tuple[int, Vector, Vector]] = []
    current = list(v)
    k = 0
    while True:
        reduced = list(current)
        combination = [0] * k + [1]
        for pivot, stored, stored_combination in basis:
            c = reduced[pivot]
            if c:
                reduced = [ctx.sub(x, ctx.mul(c, y)) if y else x for x, y in zip(reduced, stored)]
                for i, y in enumerate(stored_combination):
                    if y:
                        combination[i] = ctx.sub(combination[i], ctx.mul(c, y))
        pivot = next((i for i, x in enumerate(reduced) if x), None)
        if pivot is None:
            return Poly(ctx, combination).monic()
        inv = ctx.inv(reduced[pivot])
        basis.append((pivot, [ctx.mul(inv, x) for x in reduced], [ctx.mul(inv, x) for x in combination]))
        current = A.apply(current)
        k += 1


def apply_polynomial(A: Mat, f: Poly, v: Sequence[int]) -> Vector:
    """f(A) v by Horner's rule."""
    ctx = A.ctx
    result = [0] * len(v)
    for c in reversed(f.codes):
        result = A.apply(result)
        if c:
            result = [ctx.add(x, ctx.mul(c, y)) for x, y in zip(result, v)]
    return result


def evaluate_polynomial(f: Poly, A: Mat) -> Mat:
    ctx, n = A.ctx, A.n
    result = Mat.zeros(ctx, n)
    for c in reversed(f.codes):
        result = result * A
        if c:
            result = result + Mat.diagonal(ctx, [FFElem(ctx, c)] * n)
    return result


def minimal_polynomial(A: Mat) -> Poly:
    ctx, n = A.ctx, A.n
    result = Poly.one(ctx)
    for j in range(n):
        e = unit_vector(n, j)
        if not any(apply_polynomial(A, result, e)):
            continue
        result = lcm(result, minimal_polynomial_of_vector(A, e))
    return result


def centralizer_dim(A: Mat) -> int:
    """Dimension of {X : AX = XA}, from the rank of the n^2 x n^2 linear system."""
    ctx, n = A.ctx, A.n
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                if A.rows[i][k]:
                    row[k * n + j] = ctx.add(row[k * n + j], A.rows[i][k])
                if A.rows[k][j]:
                    row[i * n + k] = ctx.sub(row[i * n + k], A.rows[k][j])
            rows.append(row)
    return n * n - len(_rref(ctx, rows, n * n)[1])


def centralizer_dim_from_invariant_factors(factors: Sequence[Poly]) -> int:
    """Frobenius' formula: the sum over pairs of invariant factors of deg gcd."""
    return sum(gcd(f, g).degree for f in factors for g in factors)


def fixed_space_rank_defect(A: Mat) -> int:
    """rank(A - I), the codimension of the fixed space."""
    return (A - Mat.identity(A.ctx, A.n)).rank()


def eigenspace(A: Mat, value: Scalar) -> List[Vector]:
    return (A - Mat.scalar(A.ctx, A.n, value)).nullspace()


def is_eigenvector(A: Mat, v: Sequence[int], value: Scalar) -> bool:
    ctx = A.ctx
    code = _code(ctx, value)
    return any(v) and A.apply(v) == [ctx.mul(code, x) for x in v]


# subspaces

class EchelonBasis:
    """Row-echelon accumulator: each stored vector is normalized at its pivot and reduced by earlier ones."""

    def __init__(self, ctx: FieldCtx, n: int):
        self.ctx = ctx
        self.n = n
        self.vectors: List[Vector] = []
        self.pivots: List[int] = []

    def __len__(self):
        return len(self.vectors)

    @property
    def is_full(self) -> bool:
        return len(self.vectors) == self.n

    def reduce(self, v: Sequence[int]) -> Vector:
        ctx = self.ctx
        reduced = list(v)
        for pivot, stored in zip(self.pivots, self.vectors):
            c = reduced[pivot]
            if c:
                reduced = [ctx.sub(x, ctx.mul(c, y)) if y else x for x, y in zip(reduced, stored)]
        return reduced

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence[int]) -> Optional[Vector]:
        """Adds v if it is new; returns the stored vector or None."""
        reduced = self.reduce(v)
        pivot = next((i for i, x in enumerate(reduced) if x), None)
        if pivot is None:
            return None
        inv = self.ctx.inv(reduced[pivot])
        stored = [self.ctx.mul(inv, x) for x in reduced]
        self.vectors.append(stored)
        self.pivots.append(pivot)
        return stored


def spin(vectors: Iterable[Sequence[int]], gens: Sequence[Mat]) -> List[Vector]:
    """Basis of the smallest subspace containing the vectors and invariant under every generator.

    Breadth-first over a worklist; generators are applied in list order to basis vectors in the order
    they were found.
    """
    gens = list(gens)
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    ctx = gens[0].ctx if gens else None
    if ctx is None:
        raise DimensionMismatch('spin needs at least one generator')
    accumulator = EchelonBasis(ctx, len(vectors[0]))
    queue = deque()
    for v in vectors:
        stored = accumulator.add(v)
        if stored is not None:
            queue.append(stored)
    while queue and not accumulator.is_full:
        u = queue.popleft()
        for g in gens:
            stored = accumulator.add(g.apply(u))
            if stored is not None:
                queue.append(stored)
    logger.debug(f'Spun {len(vectors)} seed(s) to dimension {len(accumulator)}')
    return accumulator.vectors


def span_contains(ctx: FieldCtx, vectors: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    accumulator = EchelonBasis(ctx, len(v))
    for u in vectors:
        accumulator.add(u)
    return accumulator.contains(v)


# sesquilinear forms

def preserves_form(g: Mat, J: Mat) -> bool:
    """g^T J g^psi == J."""
    return g.T * J * g.psi() == J


def invariant_forms(gens: Sequence[Mat]) -> List[Mat]:
    """Basis of {X : g^T X g^psi = X for every generator g}, solved as one linear system in the entries of X."""
    ctx, n = gens[0].ctx, gens[0].n
    rows = []
    for g in gens:
        g_psi = g.psi()
        for i in range(n):
            left = g.column(i)
            for j in range(n):
                right = g_psi.column(j)
                row = [0] * (n * n)
                for k, a in enumerate(left):
                    if a:
                        for l, b in enumerate(right):
                            if b:
                                row[k * n + l] = ctx.mul(a, b)
                row[i * n + j] = ctx.sub(row[i * n + j], 1)
                rows.append(row)
    solutions = Mat(ctx, rows).nullspace()
    return [Mat(ctx, [s[i * n:(i + 1) * n] for i in range(n)]) for s in solutions]


def hermitian_invariant_form(gens: Sequence[Mat]) -> Tuple[Mat, int]:
    """A nonzero Hermitian form preserved by the generators, and the dimension of the space of invariant forms.

    When that space is one-dimensional, X^{T psi} is a multiple of X and X + X^{T psi} (or eps X + (eps X)^{T psi}
    for eps outside GF(q)) is Hermitian. The result is scaled so that its first nonzero GF(q) entry is 1.
    """
    forms = invariant_forms(gens)
    if not forms:
        raise NotInvertible('No invariant sesquilinear form')
    X = forms[0]
    ctx = X.ctx
    H = X + X.T.psi()
    if H.is_scalar_value(0):
        eps = ctx.primitive_element
        H = X * FFElem(ctx, eps) + (X * FFElem(ctx, eps)).T.psi()
    first = next((x for row in H.rows for x in row if x and ctx.in_gfq(x)), None)
    if first is not None:
        H = H * FFElem(ctx, ctx.inv(first))
    return H, len(forms)
