"""Compare product orders on the genus-2 curve over F_27 against brute-force chi(t) mod 3.

Only A A^sigma A^sigma^2 (or equivalently B B^tau B^tau^2) is correct;
the other orderings show how each convention slip changes the answer.

    python scripts/pitfall_demo.py
"""

from cartier.curve import cartier_manin, coefficient_matrix, hasse_witt, make_curve
from cartier.gf import FieldContext
from cartier.invariants import chi_mod_p
from cartier.oracle import l_polynomial_exact
from cartier.poly import Polynomial, pretty
from cartier.semilin import TwistPower, apply_twist, char_poly, mul, twisted_product


def reversed_product(M, t, r):
    """Highest twist on the LEFT: the right-action formula applied to a left-action matrix."""
    acc = apply_twist(M, t * (r - 1))
    for s in range(r - 2, -1, -1):
        acc = mul(acc, apply_twist(M, t * s))
    return acc


def main():
    F = FieldContext(3, 3, (1, 2, 0, 1))
    a = F.gen
    X = make_curve(F, Polynomial(F, [0, a, a**2, 0, 0, 1]), 2)
    sigma, tau = TwistPower.sigma(3), TwistPower.tau(3)
    Y, A, B = coefficient_matrix(X), hasse_witt(X), cartier_manin(X)
    L = l_polynomial_exact(X)
    print("brute-force L(T):", L)
    print("chi(t) mod 3:    ", pretty(chi_mod_p(X), "t"))
    candidates = {
        "Y Y^s Y^s^2   (naive, Yui matrix as Hasse-Witt)": twisted_product(Y, sigma, 3),
        "Y^s^2 Y^s Y   (naive, reversed order)": reversed_product(Y, sigma, 3),
        "A A^s A^s^2   (correct)": twisted_product(A, sigma, 3),
        "B B^t B^t^2   (correct, Cartier side)": twisted_product(B, tau, 3),
        "A^s^2 A^s A   (right-action order on a left matrix)": reversed_product(A, sigma, 3),
    }
    for name, M in candidates.items():
        cp = char_poly(M)
        shown = pretty(Polynomial(FieldContext(3), [c.to_int() for c in cp.coeffs]), "t") \
            if all(c.in_prime_field() for c in cp.coeffs) else f"{cp} (not over F_3)"
        print(f"{name:55s} charpoly = {shown}")


if __name__ == "__main__":
    main()
