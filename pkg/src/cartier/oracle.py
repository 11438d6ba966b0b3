"""Brute-force ground truth: point counts over F_{q^k} and the exact L-polynomial.

Nothing here touches the Cartier / Hasse-Witt machinery; the point is to be
obviously correct, not fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, isqrt

from .curve import HyperellipticCurve
from .gf import FieldContext, FieldElement, find_irreducible, is_square
from .poly import Polynomial, evaluate

DEFAULT_BOUND = 10**6


class BoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PointCounts:
    q: int
    counts: tuple[int, ...]  # N_1, N_2, ...


@dataclass(frozen=True)
class ExactLPoly:
    coeffs: tuple[int, ...]  # b_0 .. b_{2g}
    q: int

    @property
    def genus(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def mod_p(self, p: int) -> Polynomial:
        return Polynomial(FieldContext(p), list(self.coeffs))

    def __str__(self):
        terms = []
        for i, b in enumerate(self.coeffs):
            if b == 0:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if i == 0:
                terms.append(str(b))
            elif b == 1:
                terms.append(mono)
            elif b == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{b}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


@lru_cache(maxsize=None)
def extension(ctx: FieldContext, k: int) -> tuple[FieldContext, FieldElement]:
    """F_{q^k} as a fresh degree e*k field over F_p, with the image of alpha.

    The image is a root of ctx.modulus found by exhaustive search.
    """
    if k == 1:
        return ctx, ctx.gen
    big = FieldContext(ctx.p, ctx.e * k, find_irreducible(ctx.p, ctx.e * k))
    mod = Polynomial(big, list(ctx.modulus))
    for x in big.elements():
        if evaluate(mod, x).is_zero():
            return big, x
    raise AssertionError("modulus has no root in the extension")


def embed(a: FieldElement, big: FieldContext, root: FieldElement) -> FieldElement:
    acc = big.zero
    for c in reversed(a.coeffs):
        acc = acc * root + c
    return acc


def count_points(X: HyperellipticCurve, k: int, bound: int = DEFAULT_BOUND) -> int:
    """Projective points of the smooth model of y^2 = f(x) over F_{q^k}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    size = X.q ** k
    if size > bound:
        raise BoundExceeded(f"F_{{{X.q}^{k}}} has {size} elements, above the bound {bound}")
    big, root = extension(X.ctx, k)
    f = [embed(c, big, root) for c in X.f.coeffs]
    squares = {(x * x).coeffs for x in big.elements()}
    total = 0
    for x in big.elements():
        v = big.zero
        for c in reversed(f):
            v = v * x + c
        if v.is_zero():
            total += 1
        elif v.coeffs in squares:
            total += 2
    if X.f.degree % 2:
        total += 1
    elif is_square(f[-1]):
        total += 2
    return total


def point_counts(X: HyperellipticCurve, n: int, bound: int = DEFAULT_BOUND) -> PointCounts:
    return PointCounts(q=X.q, counts=tuple(count_points(X, k, bound) for k in range(1, n + 1)))


def _newton(S: list[int]) -> list[int]:
    """b_1..b_n of prod(1 - a_i T) from power sums S_1..S_n, over the integers."""
    b = [1]
    for k in range(1, len(S) + 1):
        total = -sum(b[k - i] * S[i - 1] for i in range(1, k + 1))
        if total % k:
            raise ArithmeticError(f"Newton identity at k={k} is not integral")
        b.append(total // k)
    return b


def l_polynomial_exact(X: HyperellipticCurve, bound: int = DEFAULT_BOUND) -> ExactLPoly:
    g, q = X.g, X.q
    N = point_counts(X, g, bound).counts
    S = [q**k + 1 - N[k - 1] for k in range(1, g + 1)]
    b = _newton(S)
    for i in range(g - 1, -1, -1):
        b.append(q ** (g - i) * b[i])
    L = ExactLPoly(tuple(b), q)
    if not weil_bound_ok(L):
        raise ArithmeticError(f"{L} violates the Weil bound")
    return L


def check_functional_equation(X: HyperellipticCurve, bound: int = DEFAULT_BOUND) -> bool:
    """Count N_{g+1} too and confirm Newton's b_{g+1} matches q * b_{g-1}."""
    g, q = X.g, X.q
    N = point_counts(X, g + 1, bound).counts
    S = [q**k + 1 - N[k - 1] for k in range(1, g + 2)]
    b = _newton(S)
    return b[g + 1] == q * b[g - 1]


def p_rank_oracle(X: HyperellipticCurve, bound: int = DEFAULT_BOUND) -> int:
    L = l_polynomial_exact(X, bound)
    return L.mod_p(X.p).degree


def weil_bound_ok(L: ExactLPoly) -> bool:
    # |b_i| <= C(2g, i) q^(i/2)
    g, q = L.genus, L.q
    return all(bi * bi <= comb(2 * g, i) ** 2 * q**i for i, bi in enumerate(L.coeffs))


def hasse_weil_interval(q: int, g: int) -> tuple[int, int]:
    """Integer range allowed for N_1 by |N_1 - q - 1| <= 2 g sqrt(q)."""
    r = isqrt(4 * g * g * q)
    return q + 1 - r, q + 1 + r
