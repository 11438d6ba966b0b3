"""Hyperelliptic curves y^2 = f(x) and their Cartier-Manin / Hasse-Witt matrices.

Basis of regular differentials: omega_i = x^(i-1) dx / y, i = 1..g. With
f^((p-1)/2) = sum c_m x^m, the Cartier operator sends omega_j to
sum_i tau(c_{ip-j}) omega_i. Rows are indexed by i, columns by j.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .gf import FieldContext, FieldSyntaxError, format_element, parse_element, random_element
from .poly import Polynomial, coefficient, is_squarefree, power
from .semilin import Matrix, TwistPower, apply_twist, transpose

DEFAULT_POWER_BOUND = 200_000


class CurveError(ValueError):
    """The data do not define a valid hyperelliptic curve."""


class PowerBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class HyperellipticCurve:
    ctx: FieldContext
    f: Polynomial
    g: int

    def __post_init__(self):
        if self.ctx.p == 2:
            raise CurveError("odd characteristic required")
        self.ctx._check(self.f.ctx)
        if self.g < 1:
            raise CurveError(f"genus must be >= 1, got {self.g}")
        if self.f.degree not in (2 * self.g + 1, 2 * self.g + 2):
            raise CurveError(
                f"deg f = {self.f.degree} but genus {self.g} needs degree {2 * self.g + 1} or {2 * self.g + 2}")
        if not is_squarefree(self.f):
            raise CurveError("f is not squarefree")

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def e(self) -> int:
        return self.ctx.e

    @property
    def q(self) -> int:
        return self.ctx.q


def make_curve(ctx: FieldContext, f: Polynomial, g: int) -> HyperellipticCurve:
    return HyperellipticCurve(ctx, f, g)


@dataclass(frozen=True)
class CartierData:
    Y: Matrix  # Yui's untwisted coefficient matrix
    B: Matrix  # Cartier-Manin, tau-linear
    A: Matrix  # Hasse-Witt, sigma-linear


def _frobenius_power_matrix(X: HyperellipticCurve, n: int, bound: int) -> Matrix:
    p, g = X.p, X.g
    pn = p ** n
    exponent = (pn - 1) // 2
    if exponent * X.f.degree > bound:
        raise PowerBoundExceeded(
            f"f^{exponent} has degree {exponent * X.f.degree}, above the bound {bound}")
    h = power(X.f, exponent)
    return Matrix(X.ctx, g, g, [coefficient(h, i * pn - j) for i in range(1, g + 1) for j in range(1, g + 1)])


def coefficient_matrix(X: HyperellipticCurve) -> Matrix:
    """Y with Y[i, j] = c_{ip - j}, 1-based i, j."""
    return _frobenius_power_matrix(X, 1, DEFAULT_POWER_BOUND)


def cartier_manin(X: HyperellipticCurve) -> Matrix:
    """B = Y^tau; left-multiplication gives the Cartier operator on the omega basis."""
    return apply_twist(coefficient_matrix(X), TwistPower.tau(X.e))


def hasse_witt(X: HyperellipticCurve) -> Matrix:
    """A = (B^sigma)^T = Y^T, the sigma-linear Frobenius on H^1(X, O_X) in the dual basis."""
    return transpose(coefficient_matrix(X))


def cartier_data(X: HyperellipticCurve) -> CartierData:
    Y = coefficient_matrix(X)
    return CartierData(Y=Y, B=apply_twist(Y, TwistPower.tau(X.e)), A=transpose(Y))


def iterated_cartier_direct(X: HyperellipticCurve, n: int, bound: int = DEFAULT_POWER_BOUND) -> Matrix:
    """Matrix of the n-th iterate of the Cartier operator, read off f^((p^n-1)/2).

    Entry (i, j) is the p^n-th root of the coefficient of x^(i p^n - j).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return apply_twist(_frobenius_power_matrix(X, n, bound), TwistPower(-n, X.e))


def random_curve(ctx: FieldContext, g: int, rng, degree: int | None = None) -> HyperellipticCurve:
    """A uniformly drawn squarefree f of degree 2g+1 or 2g+2 (rejection sampling)."""
    while True:
        d = degree if degree is not None else rng.choice((2 * g + 1, 2 * g + 2))
        coeffs = [random_element(ctx, rng) for _ in range(d)]
        lead = random_element(ctx, rng)
        if lead.is_zero():
            continue
        f = Polynomial(ctx, coeffs + [lead])
        if is_squarefree(f):
            return HyperellipticCurve(ctx, f, g)


# -- curve spec files --------------------------------------------------------

class SpecParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class SpecValidationError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class CurveSpec:
    p: int
    e: int
    modulus: tuple[int, ...] | None
    genus: int
    f: tuple[str, ...]


_KEYS = ("p", "e", "modulus", "genus", "f")
_LINE = re.compile(r"^([A-Za-z_]+)\s*=\s*(.+?)\s*$")
_LIST = re.compile(r"^\[(.*)\]$")


def _split_list(value: str, line: int) -> list[str]:
    m = _LIST.match(value)
    if not m:
        raise SpecParseError(f"expected a bracketed list, got {value!r}", line)
    # split on commas not nested inside [...]
    items, depth, cur = [], 0, ""
    for ch in m.group(1):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            items.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        items.append(cur.strip())
    if any(not it for it in items):
        raise SpecParseError("empty list item", line)
    return items


def _int(value: str, key: str, line: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise SpecParseError(f"{key} must be an integer, got {value!r}", line) from None


def parse_spec(text: str) -> tuple[CurveSpec, dict[str, int]]:
    """Parse the line-oriented curve spec; returns the spec and the line of each key."""
    found: dict[str, tuple[str, int]] = {}
    order: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise SpecParseError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, value = m.group(1), m.group(2)
        if key not in _KEYS:
            raise SpecParseError(f"unknown key {key!r}", lineno)
        if key in found:
            raise SpecParseError(f"duplicate key {key!r}", lineno)
        found[key] = (value, lineno)
        order.append(key)

    for key in ("p", "e", "genus", "f"):
        if key not in found:
            raise SpecParseError(f"missing key {key!r}")
    expected = [k for k in _KEYS if k in found]
    if order != expected:
        bad = next(k for k, x in zip(order, expected) if k != x)
        raise SpecParseError(f"key {bad!r} out of order; keys must appear as {', '.join(_KEYS)}",
                             found[bad][1])

    p = _int(found["p"][0], "p", found["p"][1])
    e = _int(found["e"][0], "e", found["e"][1])
    genus = _int(found["genus"][0], "genus", found["genus"][1])
    modulus = None
    if "modulus" in found:
        value, lineno = found["modulus"]
        if e == 1:
            raise SpecParseError("modulus must be omitted when e = 1", lineno)
        modulus = tuple(_int(x, "modulus entry", lineno) for x in _split_list(value, lineno))
    elif e > 1:
        raise SpecParseError("missing key 'modulus' (required when e > 1)")
    f = tuple(_split_list(*found["f"]))
    lines = {k: v[1] for k, v in found.items()}
    return CurveSpec(p=p, e=e, modulus=modulus, genus=genus, f=f), lines


def build_curve(spec: CurveSpec, lines: dict[str, int] | None = None) -> HyperellipticCurve:
    lines = lines or {}
    try:
        ctx = FieldContext(spec.p, spec.e, spec.modulus or ())
    except ValueError as exc:
        key = "modulus" if spec.modulus and "modul" in str(exc) else "p"
        raise SpecValidationError(str(exc), lines.get(key)) from None
    try:
        f = Polynomial(ctx, [parse_element(ctx, s) for s in spec.f])
    except FieldSyntaxError as exc:
        raise SpecParseError(str(exc), lines.get("f")) from None
    try:
        return HyperellipticCurve(ctx, f, spec.genus)
    except CurveError as exc:
        key = "genus" if "genus" in str(exc) else "f"
        raise SpecValidationError(str(exc), lines.get(key)) from None


def load_curve(path: str | Path) -> HyperellipticCurve:
    spec, lines = parse_spec(Path(path).read_text())
    return build_curve(spec, lines)


def format_spec(X: HyperellipticCurve) -> str:
    out = [f"p = {X.p}", f"e = {X.e}"]
    if X.e > 1:
        out.append("modulus = [" + ",".join(map(str, X.ctx.modulus)) + "]")
    out.append(f"genus = {X.g}")
    out.append("f = [" + ",".join(format_element(c) for c in X.f.coeffs) + "]")
    return "\n".join(out) + "\n"
