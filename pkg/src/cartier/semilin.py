"""Matrices over F_q and the semilinear operations on them.

Convention: a matrix acts on the LEFT of column vectors. If ``f`` is
eps-linear with matrix ``A`` (``f(v_j) = sum_i A[i, j] v_i``), then

    [f(v)] = A @ [v]^eps,
    [f o f o ... o f] (r times) = A @ A^eps @ A^(eps^2) @ ... @ A^(eps^(r-1)).

The right-action variant (highest twist on the leftmost factor) is not
offered; mixing the two conventions is how the wrong iterate gets computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence, Union

from .gf import FieldContext, FieldElement, format_element, frobenius, parse_element, random_element
from .poly import Polynomial


class DimensionError(ValueError):
    pass


class SingularMatrixError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class TwistPower:
    """The automorphism sigma^k of F_{p^e}; ``k == e - 1`` is tau."""

    k: int
    e: int

    def __post_init__(self):
        if self.e < 1:
            raise ValueError("e must be positive")
        object.__setattr__(self, "k", self.k % self.e)

    @classmethod
    def sigma(cls, e: int) -> "TwistPower":
        return cls(1, e)

    @classmethod
    def tau(cls, e: int) -> "TwistPower":
        return cls(-1, e)

    @classmethod
    def identity(cls, e: int) -> "TwistPower":
        return cls(0, e)

    def inverse(self) -> "TwistPower":
        return TwistPower(-self.k, self.e)

    def __mul__(self, r: int) -> "TwistPower":
        # eps^r
        return TwistPower(self.k * r, self.e)

    __rmul__ = __mul__

    def __repr__(self):
        names = {0: "id", 1: "sigma", self.e - 1: "tau"}
        name = names.get(self.k, f"sigma^{self.k}")
        return f"TwistPower({name}, e={self.e})"


Twist = Union[TwistPower, int]


def _k(t: Twist, ctx: FieldContext) -> int:
    if isinstance(t, TwistPower):
        if t.e != ctx.e:
            raise ValueError(f"{t} does not act on {ctx}")
        return t.k
    return t % ctx.e


class Matrix:
    """Immutable dense matrix, entries stored row-major."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx: FieldContext, rows: int, cols: int, entries: Iterable):
        es = tuple(ctx.element(x) for x in entries)
        if rows < 1 or cols < 1:
            raise DimensionError("matrix dimensions must be positive")
        if len(es) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(es)}")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", es)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows: Sequence[Sequence]) -> "Matrix":
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged or empty row list")
        return cls(ctx, len(rows), len(rows[0]), [x for r in rows for x in r])

    @classmethod
    def zero(cls, ctx: FieldContext, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(ctx, rows, cols, [ctx.zero] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[FieldElement, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[FieldElement]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries) \
            and self.ctx == other.ctx

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        self.ctx._check(other.ctx)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        return Matrix(self.ctx, self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __repr__(self):
        return "Matrix(" + repr([[format_element(x) for x in r] for r in self.to_rows()]) + ")"


def identity(ctx: FieldContext, n: int) -> Matrix:
    return Matrix(ctx, n, n, [ctx.one if i == j else ctx.zero for i in range(n) for j in range(n)])


def transpose(A: Matrix) -> Matrix:
    return Matrix(A.ctx, A.cols, A.rows, [A[i, j] for j in range(A.cols) for i in range(A.rows)])


def mul(A: Matrix, B: Matrix) -> Matrix:
    A.ctx._check(B.ctx)
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    ctx = A.ctx
    out = []
    for i in range(A.rows):
        arow = A.row(i)
        for j in range(B.cols):
            acc = ctx.zero
            for k, a in enumerate(arow):
                acc = acc + a * B.entries[k * B.cols + j]
            out.append(acc)
    return Matrix(ctx, A.rows, B.cols, out)


def matpow(A: Matrix, n: int) -> Matrix:
    """Ordinary (untwisted) power; only meaningful for linear operators."""
    _require_square(A)
    result = identity(A.ctx, A.rows)
    base = A
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result


def _require_square(A: Matrix) -> None:
    if not A.is_square:
        raise DimensionError(f"expected a square matrix, got {A.rows}x{A.cols}")


# -- semilinear operations ---------------------------------------------------

def apply_twist(A: Matrix, t: Twist) -> Matrix:
    """Entrywise sigma^k."""
    k = _k(t, A.ctx)
    if k == 0:
        return A
    return Matrix(A.ctx, A.rows, A.cols, [frobenius(x, k) for x in A.entries])


def twisted_product(A: Matrix, t: Twist, r: int) -> Matrix:
    """A @ A^eps @ ... @ A^(eps^(r-1)): the matrix of the r-fold iterate."""
    _require_square(A)
    if r < 1:
        raise ValueError("r must be >= 1")
    k = _k(t, A.ctx)
    acc = A
    for s in range(1, r):
        acc = mul(acc, apply_twist(A, k * s))
    return acc


def change_basis(A: Matrix, S: Matrix, t: Twist) -> Matrix:
    """S^-1 @ A @ S^eps, where S's columns express the new basis in the old."""
    _require_square(A)
    if (S.rows, S.cols) != (A.rows, A.cols):
        raise DimensionError("change-of-basis matrix must match A's shape")
    return mul(mul(inverse(S), A), apply_twist(S, t))


def adjoint(A: Matrix, t: Twist) -> tuple[Matrix, TwistPower]:
    """Matrix of the adjoint in the dual basis: ((A^delta)^T, delta), delta = eps^-1."""
    _require_square(A)
    delta = TwistPower(-_k(t, A.ctx), A.ctx.e)
    return transpose(apply_twist(A, delta)), delta


# -- exact linear algebra ----------------------------------------------------

def _echelon(A: Matrix) -> tuple[list[list[FieldElement]], int, FieldElement]:
    """Row-reduce a copy of A; returns (rows, rank, determinant-if-square)."""
    ctx = A.ctx
    m = A.to_rows()
    rank = 0
    det = ctx.one
    for col in range(A.cols):
        pivot = next((r for r in range(rank, A.rows) if not m[r][col].is_zero()), None)
        if pivot is None:
            det = ctx.zero
            continue
        if pivot != rank:
            m[rank], m[pivot] = m[pivot], m[rank]
            det = -det
        pv = m[rank][col]
        det = det * pv
        inv_pv = pv.inverse()
        for r in range(rank + 1, A.rows):
            c = m[r][col]
            if c.is_zero():
                continue
            f = c * inv_pv
            m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == A.rows:
            break
    return m, rank, det


def rank(A: Matrix) -> int:
    return _echelon(A)[1]


def det(A: Matrix) -> FieldElement:
    _require_square(A)
    _, r, d = _echelon(A)
    return d if r == A.rows else A.ctx.zero


def inverse(A: Matrix) -> Matrix:
    _require_square(A)
    ctx, n = A.ctx, A.rows
    m = [list(A.row(i)) + [ctx.one if i == j else ctx.zero for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv_pv = m[col][col].inverse()
        m[col] = [x * inv_pv for x in m[col]]
        for r in range(n):
            if r != col and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return Matrix(ctx, n, n, [x for row in m for x in row[n:]])


def char_poly(A: Matrix) -> Polynomial:
    """det(T*I - A), monic of degree n, via reduction to upper Hessenberg form."""
    _require_square(A)
    ctx, n = A.ctx, A.rows
    h = A.to_rows()
    # similarity transforms to Hessenberg form
    for col in range(n - 2):
        pivot = next((r for r in range(col + 1, n) if not h[r][col].is_zero()), None)
        if pivot is None:
            continue
        if pivot != col + 1:
            h[col + 1], h[pivot] = h[pivot], h[col + 1]
            for row in h:
                row[col + 1], row[pivot] = row[pivot], row[col + 1]
        inv_pv = h[col + 1][col].inverse()
        for r in range(col + 2, n):
            f = h[r][col] * inv_pv
            if f.is_zero():
                continue
            h[r] = [x - f * y for x, y in zip(h[r], h[col + 1])]
            for row in h:
                row[col + 1] = row[col + 1] + f * row[r]
    # p_k = det(T*I - H[:k, :k]) by the Hessenberg recurrence
    polys = [Polynomial(ctx, [1])]
    T = Polynomial.monomial(ctx, 1)
    for k in range(1, n + 1):
        pk = (T - h[k - 1][k - 1]) * polys[k - 1]
        prod = ctx.one
        for i in range(k - 1, 0, -1):
            prod = prod * h[i][i - 1]
            if prod.is_zero():
                break
            pk = pk - Polynomial(ctx, [prod * h[i - 1][k - 1]]) * polys[i - 1]
        polys.append(pk)
    return polys[n]


def char_poly_leibniz(A: Matrix) -> Polynomial:
    """det(T*I - A) by the permutation expansion; an O(n! n) cross-check."""
    _require_square(A)
    ctx, n = A.ctx, A.rows
    T = Polynomial.monomial(ctx, 1)
    entry = [[(T if i == j else Polynomial(ctx)) - A[i, j] for j in range(n)] for i in range(n)]
    total = Polynomial(ctx)
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                j, length = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    length += 1
                if length % 2 == 0:
                    sign = -sign
        term = Polynomial(ctx, [sign])
        for i in range(n):
            term = term * entry[i][perm[i]]
        total = total + term
    return total


def random_matrix(ctx: FieldContext, rows: int, cols: int | None, rng) -> Matrix:
    cols = rows if cols is None else cols
    return Matrix(ctx, rows, cols, [random_element(ctx, rng) for _ in range(rows * cols)])


def random_invertible(ctx: FieldContext, n: int, rng) -> Matrix:
    while True:
        S = random_matrix(ctx, n, n, rng)
        if rank(S) == n:
            return S


# -- serialization -----------------------------------------------------------

def format_matrix(A: Matrix) -> list[list[str]]:
    return [[format_element(x) for x in r] for r in A.to_rows()]


def parse_matrix(ctx: FieldContext, rows: Sequence[Sequence[str]]) -> Matrix:
    return Matrix.from_rows(ctx, [[parse_element(ctx, s) for s in r] for r in rows])
