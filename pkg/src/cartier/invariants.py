"""p-torsion and zeta invariants read off the Hasse-Witt / Cartier-Manin matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .curve import HyperellipticCurve, cartier_manin, coefficient_matrix, hasse_witt
from .gf import FieldContext
from .poly import Polynomial
from .semilin import Matrix, TwistPower, char_poly, matpow, rank, twisted_product


class InconsistencyError(RuntimeError):
    """Two independent computations of the same invariant disagree (a bug, never expected)."""


@dataclass(frozen=True)
class ModPZeta:
    l_mod_p: Polynomial
    chi_mod_p: Polynomial


def frobenius_iterate(X: HyperellipticCurve) -> Matrix:
    """M = A A^sigma ... A^(sigma^(e-1)), the F_q-linear e-th iterate of Frobenius."""
    return twisted_product(hasse_witt(X), TwistPower.sigma(X.e), X.e)


def cartier_iterate(X: HyperellipticCurve) -> Matrix:
    """N = B B^tau ... B^(tau^(e-1))."""
    return twisted_product(cartier_manin(X), TwistPower.tau(X.e), X.e)


def _to_prime_field(a: Polynomial) -> Polynomial:
    Fp = FieldContext(a.ctx.p)
    out = []
    for i, c in enumerate(a.coeffs):
        if not c.in_prime_field():
            raise InconsistencyError(f"coefficient of T^{i} is {c}, outside F_{a.ctx.p}")
        out.append(c.to_int())
    return Polynomial(Fp, out)


def l_poly_mod_p(X: HyperellipticCurve) -> Polynomial:
    """det(I - M T) over F_p: the reduction of the L-polynomial mod p."""
    n = X.g
    cp = char_poly(frobenius_iterate(X))
    # det(I - M T) = T^n * cp(1/T): reverse the coefficients of the degree-n char poly
    rev = [cp.coeffs[n - i] if n - i < len(cp.coeffs) else cp.ctx.zero for i in range(n + 1)]
    return _to_prime_field(Polynomial(cp.ctx, rev))


def chi_mod_p(X: HyperellipticCurve) -> Polynomial:
    """(-1)^g T^g det(M - T I) = T^g det(T I - M), over F_p."""
    cp = _to_prime_field(char_poly(frobenius_iterate(X)))
    return Polynomial(cp.ctx, [0] * X.g + list(cp.coeffs))


def mod_p_zeta(X: HyperellipticCurve) -> ModPZeta:
    return ModPZeta(l_mod_p=l_poly_mod_p(X), chi_mod_p=chi_mod_p(X))


def reciprocal(a: Polynomial, n: int) -> Polynomial:
    """T^n a(1/T) for deg a <= n."""
    if a.degree > n:
        raise ValueError("degree exceeds reciprocal length")
    cs = list(a.coeffs) + [a.ctx.zero] * (n + 1 - len(a.coeffs))
    return Polynomial(a.ctx, cs[::-1])


def p_rank(X: HyperellipticCurve) -> int:
    """Stable rank of the linearized Frobenius: rank(M^g).

    Cross-checked against deg(L mod p) and the rank of the (g e)-fold twisted
    product of A; any disagreement raises InconsistencyError.
    """
    M = frobenius_iterate(X)
    r = rank(matpow(M, X.g))
    deg_l = l_poly_mod_p(X).degree
    r_twisted = rank(twisted_product(hasse_witt(X), TwistPower.sigma(X.e), X.g * X.e))
    if not r == deg_l == r_twisted:
        raise InconsistencyError(f"p-rank estimates disagree: rank(M^g)={r}, deg L={deg_l}, "
                                 f"twisted={r_twisted}")
    return r


def a_number(X: HyperellipticCurve) -> int:
    return X.g - rank(cartier_manin(X))


def is_superspecial(X: HyperellipticCurve) -> bool:
    return cartier_manin(X).is_zero()


def naive_yui_product(X: HyperellipticCurve) -> Matrix:
    """Y Y^sigma ... Y^(sigma^(e-1)) with Yui's untransposed matrix.

    WRONG for zeta purposes: Y is a Cartier matrix, not a Hasse-Witt matrix,
    so its sigma-twisted product is not the matrix of F^e. Kept only to
    reproduce the pitfall.
    """
    return twisted_product(coefficient_matrix(X), TwistPower.sigma(X.e), X.e)
