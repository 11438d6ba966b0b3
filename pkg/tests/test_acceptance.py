"""Exit criteria, one test per criterion; each records a PASS/FAIL line for the summary."""

from __future__ import annotations

import contextlib
import random
import time

import pytest

from cartier.cli import pitfall_text
from cartier.curve import (cartier_manin, coefficient_matrix, hasse_witt,
                           iterated_cartier_direct, random_curve)
from cartier.gf import frobenius, inv_frobenius, random_element
from cartier.invariants import (cartier_iterate, chi_mod_p, frobenius_iterate, is_superspecial,
                                l_poly_mod_p, naive_yui_product, p_rank)
from cartier.oracle import l_polynomial_exact, p_rank_oracle
from cartier.poly import Polynomial
from cartier.semilin import (TwistPower, adjoint, apply_twist, change_basis, char_poly, mul,
                             random_invertible, random_matrix, rank, twisted_product)

from conftest import ACCEPTANCE_RESULTS, field, mat

SEED = 20180101


@contextlib.contextmanager
def criterion(n: int, title: str, time_limit: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_RESULTS[n] = (False, f"{title}: {type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    ok = time_limit is None or elapsed < time_limit
    limit = "no limit" if time_limit is None else f"limit {time_limit:g}s"
    ACCEPTANCE_RESULTS[n] = (ok, f"{title} ({elapsed:.2f}s, {limit})")
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title} ({elapsed:.2f}s)")
    assert ok, f"criterion {n} took {elapsed:.2f}s, limit {time_limit}s"


def int_poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_criterion_1_prologue_fixture(F125, prologue_curve):
    with criterion(1, "F_125 fixture: Y, Y Y^sigma, B, A, B B^tau, p-rank", 1.0):
        a, X = F125.gen, prologue_curve
        sigma, tau = TwistPower.sigma(3), TwistPower.tau(3)
        Y = coefficient_matrix(X)
        assert Y == mat(F125, [[a**41, a**105], [2, a**95]])
        YY = twisted_product(Y, sigma, 2)
        assert YY == mat(F125, [[a**32, a**104], [a**22, a**94]])
        assert rank(YY) == 1
        B = cartier_manin(X)
        assert B == mat(F125, [[a**33, a**21], [2, a**19]])
        assert hasse_witt(X) == mat(F125, [[a**41, 2], [a**105, a**95]])
        assert twisted_product(B, tau, 2).is_zero()
        assert p_rank(X) == 0


def test_criterion_2_pitfall_fixture(F27, pitfall_curve):
    with criterion(2, "F_27 fixture: H, naive kappa = t^2+t+1, chi mod 3, DIFFER", 1.0):
        a, X = F27.gen, pitfall_curve
        assert coefficient_matrix(X) == mat(F27, [[a**2, a], [1, 0]])
        assert char_poly(naive_yui_product(X)) == Polynomial(F27, [1, 1, 1])
        # chi(t) = t^4 + 6t^3 + 52t^2 + 162t + 729 reduced mod 3, and its reciprocal
        chi_paper = [729, 162, 52, 6, 1]
        assert [c.to_int() for c in chi_mod_p(X).coeffs] == [c % 3 for c in chi_paper]
        L = l_poly_mod_p(X)
        assert [c.to_int() for c in L.coeffs] == [c % 3 for c in reversed(chi_paper)][:3]
        assert [c.to_int() for c in L.coeffs] == [1, 0, 1]
        text, differ = pitfall_text(X)
        assert differ and text.rstrip().endswith("verdict: DIFFER")


def test_criterion_3_oracle_on_fixtures(prologue_curve, pitfall_curve):
    with criterion(3, "oracle L for F_125 and F_27 fixtures, reduced mod p", 10.0):
        L125 = l_polynomial_exact(prologue_curve)
        assert list(L125.coeffs) == int_poly_mul([1, 0, 125], [1, 0, 125])
        assert L125.coeffs == (1, 0, 250, 0, 15625)
        assert L125.mod_p(5) == l_poly_mod_p(prologue_curve)
        L27 = l_polynomial_exact(pitfall_curve)
        assert L27.coeffs == tuple(reversed([729, 162, 52, 6, 1]))
        assert L27.mod_p(3) == l_poly_mod_p(pitfall_curve)


def test_criterion_4_randomized_congruence():
    with criterion(4, "60 random curves: L mod p, p-rank, char polys of F^e and C^e", 120.0):
        rng = random.Random(SEED)
        qs = (3, 5, 7, 9, 25, 27)
        checked = 0
        for i in range(60):
            # cycle through every field so each q is covered
            F = field(qs[i % len(qs)])
            X = random_curve(F, rng.choice((1, 2)), rng)
            L = l_polynomial_exact(X)
            assert L.mod_p(X.p) == l_poly_mod_p(X), X
            assert p_rank(X) == p_rank_oracle(X), X
            assert char_poly(frobenius_iterate(X)) == char_poly(cartier_iterate(X)), X
            checked += 1
        assert checked >= 50


def _random_setup(rng, fields):
    F = rng.choice(fields)
    n = rng.randint(1, 3)
    return F, n, TwistPower(rng.randrange(F.e), F.e)


def test_criterion_5_property_suites():
    with criterion(5, "property suites, 100 seeded cases each", 120.0):
        rng = random.Random(SEED)
        fields = [field(q) for q in (3, 5, 9, 25, 27, 125)]
        cases = 100
        for _ in range(cases):
            F, n, t = _random_setup(rng, fields)
            A = random_matrix(F, n, n, rng)
            B, delta = adjoint(A, t)
            assert adjoint(B, delta) == (A, t)
        for _ in range(cases):
            F, n, t = _random_setup(rng, fields)
            A = random_matrix(F, n, n, rng)
            r = rng.randint(1, 4)
            s = rng.randint(1, 5 - r)
            assert twisted_product(A, t, r + s) == mul(
                twisted_product(A, t, r), apply_twist(twisted_product(A, t, s), t * r))
        for _ in range(cases):
            F, n, t = _random_setup(rng, fields)
            A = random_matrix(F, n, n, rng)
            if rng.random() < 0.5:
                A = mat(F, [[F.zero] * n] + [list(A.row(i)) for i in range(1, n)])
            S = random_invertible(F, n, rng)
            r = rng.randint(1, 4)
            assert rank(twisted_product(change_basis(A, S, t), t, r)) == \
                rank(twisted_product(A, t, r))
        for _ in range(cases):
            F = rng.choice(fields)
            x = random_element(F, rng)
            assert frobenius(inv_frobenius(x)) == x == inv_frobenius(frobenius(x))
        for _ in range(cases):
            F = field(rng.choice((3, 5, 9)))
            X = random_curve(F, rng.choice((1, 2)), rng)
            n = rng.randint(1, 3)
            assert iterated_cartier_direct(X, n) == \
                twisted_product(cartier_manin(X), TwistPower.tau(F.e), n)


def test_criterion_6_superspecial_vs_supersingular(prologue_curve):
    with criterion(6, "F_125: not superspecial, p-rank 0, L = (1+125T^2)^2"):
        X = prologue_curve
        assert is_superspecial(X) is False
        assert p_rank(X) == 0
        assert list(l_polynomial_exact(X).coeffs) == int_poly_mul([1, 0, 125], [1, 0, 125])
