"""Command-line front end.

    cartier matrix     CURVE_SPEC
    cartier invariants CURVE_SPEC
    cartier verify     CURVE_SPEC [--bound N] [--seed N]
    cartier pitfall    CURVE_SPEC

Exit codes: 0 ok, 2 parse error, 3 validation error, 4 resource bound,
5 verification mismatch.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import invariants as inv
from . import oracle
from .curve import (HyperellipticCurve, PowerBoundExceeded, SpecParseError, SpecValidationError,
                    build_curve, cartier_data, parse_spec)
from .gf import FieldContext
from .poly import Polynomial, format_polynomial, pretty
from .report import (CurveEcho, Invariants, Iterates, Matrices, OracleSection, Report, emit,
                     render_text)
from .semilin import (TwistPower, change_basis, char_poly, format_matrix, random_invertible,
                      twisted_product)

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_BOUND, EXIT_MISMATCH = 0, 2, 3, 4, 5
DEFAULT_SEED = 20180101


def _ints(a: Polynomial) -> list[int]:
    return [c.to_int() for c in a.coeffs]


def matrix_report(X: HyperellipticCurve) -> Report:
    data = cartier_data(X)
    echo = CurveEcho(p=X.p, e=X.e, modulus=list(X.ctx.modulus) if X.e > 1 else None,
                     genus=X.g, f=format_polynomial(X.f))
    return Report(curve=echo, matrices=Matrices(Y=format_matrix(data.Y), B=format_matrix(data.B),
                                                A=format_matrix(data.A)))


def invariants_report(X: HyperellipticCurve) -> Report:
    report = matrix_report(X)
    report.iterates = Iterates(M=format_matrix(inv.frobenius_iterate(X)),
                               N=format_matrix(inv.cartier_iterate(X)))
    report.invariants = Invariants(
        p_rank=inv.p_rank(X),
        a_number=inv.a_number(X),
        is_superspecial=inv.is_superspecial(X),
        l_mod_p=_ints(inv.l_poly_mod_p(X)),
        chi_mod_p=_ints(inv.chi_mod_p(X)),
    )
    return report


def basis_change_selfcheck(X: HyperellipticCurve, seed: int) -> bool:
    """char poly of F^e is unchanged by a random sigma-twisted change of basis."""
    rng = random.Random(seed)
    sigma = TwistPower.sigma(X.e)
    A = inv.hasse_witt(X)
    S = random_invertible(X.ctx, X.g, rng)
    moved = twisted_product(change_basis(A, S, sigma), sigma, X.e)
    return char_poly(moved) == char_poly(twisted_product(A, sigma, X.e))


def verify_report(X: HyperellipticCurve, bound: int, seed: int) -> Report:
    report = invariants_report(X)
    counts = oracle.point_counts(X, X.g, bound)
    L = oracle.l_polynomial_exact(X, bound)
    L_mod_p = _ints(L.mod_p(X.p))
    rank_oracle = len(L_mod_p) - 1
    try:
        fe = oracle.check_functional_equation(X, bound)
    except oracle.BoundExceeded:
        fe = None
    report.oracle = OracleSection(
        counts=list(counts.counts),
        exact_l=list(L.coeffs),
        exact_l_mod_p=L_mod_p,
        p_rank_oracle=rank_oracle,
        l_mod_p_agrees=L_mod_p == report.invariants.l_mod_p,
        p_rank_agrees=rank_oracle == report.invariants.p_rank,
        functional_equation=fe,
        basis_change_selfcheck=basis_change_selfcheck(X, seed),
        seed=seed,
    )
    return report


def verify_ok(report: Report) -> bool:
    o = report.oracle
    return o.l_mod_p_agrees and o.p_rank_agrees and o.functional_equation is not False \
        and o.basis_change_selfcheck


def pitfall_text(X: HyperellipticCurve) -> tuple[str, bool]:
    """Text of the demonstration and whether the naive and correct answers differ."""
    H = inv.naive_yui_product(X)
    kappa = char_poly(H)
    # Cast into F_p[t] when possible; the wrong product need not have F_p char poly.
    Fp = FieldContext(X.p)
    if all(c.in_prime_field() for c in kappa.coeffs):
        kappa_p = Polynomial(Fp, [c.to_int() for c in kappa.coeffs])
        naive_chi = Polynomial(Fp, [0] * X.g + list(kappa_p.coeffs))
        kappa_s = pretty(kappa_p, "t")
    else:
        naive_chi = None
        kappa_s = str(format_polynomial(kappa)) + "  (coefficients outside F_p)"
    chi = inv.chi_mod_p(X)
    differ = naive_chi != chi
    rows = format_matrix(H)
    lines = [
        "PITFALL DEMONSTRATION -- the first product below is INCORRECT for zeta purposes.",
        "naive H_pi = Y Y^sigma ... Y^(sigma^(e-1)) with Yui's untransposed matrix Y:",
        *("  [ " + "  ".join(r) + " ]" for r in rows),
        f"kappa(t) = charpoly(naive H_pi) = {kappa_s}",
        f"naive prediction t^g kappa(t) = {pretty(naive_chi, 't') if naive_chi is not None else 'n/a'}",
        f"correct chi(t) mod p = t^g det(t I - A A^sigma ... A^(sigma^(e-1))) = {pretty(chi, 't')}",
    ]
    if X.e == 1:
        lines.append("note: e = 1, a single factor; Y and A = Y^T share a characteristic polynomial.")
    elif not differ:
        lines.append("note: the pitfall is invisible on this curve; both routes give the same chi mod p.")
    lines.append("verdict: " + ("DIFFER" if differ else "AGREE"))
    return "\n".join(lines) + "\n", differ


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cartier",
        description="Cartier-Manin and Hasse-Witt matrices of hyperelliptic curves over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [("matrix", "Yui, Cartier-Manin and Hasse-Witt matrices"),
                        ("invariants", "matrices plus p-rank, a-number, L mod p"),
                        ("verify", "invariants checked against brute-force point counts"),
                        ("pitfall", "the wrong Yui-matrix product next to the correct answer")]:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("spec", help="curve spec file")
        sp.add_argument("--bound", type=int, default=oracle.DEFAULT_BOUND,
                        help="largest field the oracle may enumerate (default: %(default)s)")
        sp.add_argument("--format", choices=("text", "machine"), default="text")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.spec) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.spec}: {exc.strerror}", file=sys.stderr)
        return EXIT_PARSE

    try:
        spec, lines = parse_spec(text)
        X = build_curve(spec, lines)
    except SpecParseError as exc:
        print(f"parse error: {args.spec}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SpecValidationError as exc:
        print(f"validation error: {args.spec}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        if args.command == "pitfall":
            text, _ = pitfall_text(X)
            sys.stdout.write(text)
            return EXIT_OK
        if args.command == "matrix":
            report = matrix_report(X)
        elif args.command == "invariants":
            report = invariants_report(X)
        else:
            report = verify_report(X, args.bound, args.seed)
    except (oracle.BoundExceeded, PowerBoundExceeded) as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except inv.InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_MISMATCH

    sys.stdout.write(emit(report) if args.format == "machine" else render_text(report))
    if args.command == "verify" and not verify_ok(report):
        print("verification FAILED: matrix side and oracle disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
