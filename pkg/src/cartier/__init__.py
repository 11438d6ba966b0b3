"""Cartier-Manin and Hasse-Witt matrices of hyperelliptic curves over finite fields.

All matrices act on the left of column vectors. For y^2 = f(x) with
f^((p-1)/2) = sum c_m x^m:

    Y[i, j] = c_{ip-j}        Yui's coefficient matrix (untwisted)
    B       = Y^tau           Cartier-Manin matrix, tau-linear
    A       = (B^sigma)^T     Hasse-Witt matrix, sigma-linear (= Y^T)

and det(I - A A^sigma ... A^(sigma^(e-1)) T) is L(T) mod p.
"""

from .curve import (CartierData, HyperellipticCurve, cartier_data, cartier_manin,
                    coefficient_matrix, hasse_witt, iterated_cartier_direct, load_curve, make_curve)
from .gf import FieldContext, FieldElement, frobenius, inv_frobenius, is_square
from .invariants import (a_number, cartier_iterate, chi_mod_p, frobenius_iterate, is_superspecial,
                         l_poly_mod_p, naive_yui_product, p_rank)
from .oracle import count_points, l_polynomial_exact, p_rank_oracle
from .poly import Polynomial
from .semilin import (Matrix, TwistPower, adjoint, apply_twist, change_basis, char_poly, rank,
                      twisted_product)

__all__ = [
    "CartierData", "FieldContext", "FieldElement", "HyperellipticCurve", "Matrix", "Polynomial",
    "TwistPower", "a_number", "adjoint", "apply_twist", "cartier_data", "cartier_iterate",
    "cartier_manin", "change_basis", "char_poly", "chi_mod_p", "coefficient_matrix",
    "count_points", "frobenius", "frobenius_iterate", "hasse_witt", "inv_frobenius",
    "is_square", "is_superspecial", "iterated_cartier_direct", "l_poly_mod_p",
    "l_polynomial_exact", "load_curve", "make_curve", "naive_yui_product", "p_rank",
    "p_rank_oracle", "rank", "twisted_product",
]
