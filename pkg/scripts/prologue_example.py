"""Walk through the genus-2 curve over F_125 and print every matrix in alpha-power form.

    python scripts/prologue_example.py
"""

from cartier.curve import cartier_manin, coefficient_matrix, hasse_witt, make_curve
from cartier.gf import FieldContext
from cartier.invariants import a_number, is_superspecial, l_poly_mod_p, p_rank
from cartier.oracle import l_polynomial_exact
from cartier.poly import Polynomial, pretty
from cartier.semilin import TwistPower, apply_twist, rank, twisted_product


def main():
    F = FieldContext(5, 3, (3, 3, 0, 1))
    a = F.gen
    log = {a**k: k for k in range(124)}  # alpha generates F_125^*

    def show(name, M):
        cells = [["0" if x.is_zero() else ("2" if x == F(2) else f"a^{log[x]}") for x in row]
                 for row in M.to_rows()]
        print(f"{name:12s}", cells)

    X = make_curve(F, Polynomial(F, [0, a**56, a**18, a**92, 1, 1]), 2)
    sigma, tau = TwistPower.sigma(3), TwistPower.tau(3)
    Y = coefficient_matrix(X)
    show("Y", Y)
    show("Y^sigma", apply_twist(Y, sigma))
    YY = twisted_product(Y, sigma, 2)
    show("Y Y^sigma", YY)
    print(f"{'':12s} rank {rank(YY)}  <- the misleading Yui-style reading")
    B = cartier_manin(X)
    show("B = Y^tau", B)
    show("B B^tau", twisted_product(B, tau, 2))
    A = hasse_witt(X)
    show("A = Y^T", A)
    show("A A^sigma", twisted_product(A, sigma, 2))
    print("p-rank:", p_rank(X), " a-number:", a_number(X), " superspecial:", is_superspecial(X))
    print("L mod 5:", pretty(l_poly_mod_p(X)))
    print("exact L (brute force):", l_polynomial_exact(X))


if __name__ == "__main__":
    main()
