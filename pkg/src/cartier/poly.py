"""Dense univariate polynomials over F_q."""

from __future__ import annotations

from typing import Iterable, Sequence

from .gf import FieldContext, FieldElement, format_element, parse_element


class Polynomial:
    """Immutable polynomial, coefficients low-to-high with no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree ``-1``
    (compare with ``is_zero()`` rather than relying on the sentinel).
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: Iterable = ()):
        cs = [ctx.element(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, ctx: FieldContext, n: int, c=1) -> "Polynomial":
        return cls(ctx, [0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def __getitem__(self, m: int) -> FieldElement:
        return coefficient(self, m)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[format_element(c) for c in self.coeffs]})"

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self.ctx._check(other.ctx)
            return other
        return Polynomial(self.ctx, [other])

    def __add__(self, other):
        return add(self, self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, self._lift(other))

    def __rsub__(self, other):
        return sub(self._lift(other), self)

    def __neg__(self):
        return Polynomial(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other):
        return mul(self, self._lift(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return power(self, n)

    def __divmod__(self, other):
        return divmod_poly(self, self._lift(other))

    def __call__(self, x) -> FieldElement:
        return evaluate(self, x)


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    a.ctx._check(b.ctx)
    n = max(len(a.coeffs), len(b.coeffs))
    z = a.ctx.zero
    return Polynomial(a.ctx, [
        (a.coeffs[i] if i < len(a.coeffs) else z) + (b.coeffs[i] if i < len(b.coeffs) else z)
        for i in range(n)
    ])


def sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return add(a, -b)


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    a.ctx._check(b.ctx)
    if a.is_zero() or b.is_zero():
        return Polynomial(a.ctx)
    out = [a.ctx.zero] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] = out[i + j] + x * y
    return Polynomial(a.ctx, out)


def power(a: Polynomial, n: int) -> Polynomial:
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = Polynomial(a.ctx, [1])
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def coefficient(a: Polynomial, m: int) -> FieldElement:
    if 0 <= m < len(a.coeffs):
        return a.coeffs[m]
    return a.ctx.zero


def derivative(a: Polynomial) -> Polynomial:
    return Polynomial(a.ctx, [c * i for i, c in enumerate(a.coeffs)][1:])


def divmod_poly(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    a.ctx._check(b.ctx)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    ctx = a.ctx
    rem = list(a.coeffs)
    db = b.degree
    inv_lead = b.leading.inverse()
    quot = [ctx.zero] * max(len(rem) - db, 0)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] * inv_lead
        quot[k] = c
        if c.is_zero():
            continue
        for i, bc in enumerate(b.coeffs):
            rem[k + i] = rem[k + i] - c * bc
    return Polynomial(ctx, quot), Polynomial(ctx, rem[:db] if db > 0 else [])


def monic(a: Polynomial) -> Polynomial:
    if a.is_zero():
        return a
    inv_lead = a.leading.inverse()
    return Polynomial(a.ctx, [c * inv_lead for c in a.coeffs])


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a.ctx._check(b.ctx)
    a, b = monic(a), monic(b)
    while not b.is_zero():
        a, b = b, monic(divmod_poly(a, b)[1])
    return a


def evaluate(a: Polynomial, x) -> FieldElement:
    x = a.ctx.element(x)
    acc = a.ctx.zero
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def is_squarefree(a: Polynomial) -> bool:
    if a.is_zero():
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    if a.degree == 0:
        return True
    da = derivative(a)
    if da.is_zero():
        # a is a p-th power of a nonconstant polynomial
        return False
    return gcd(a, da).degree == 0


def parse_polynomial(ctx: FieldContext, items: Sequence[str]) -> Polynomial:
    return Polynomial(ctx, [parse_element(ctx, s) for s in items])


def format_polynomial(a: Polynomial) -> list[str]:
    return [format_element(c) for c in a.coeffs]


def pretty(a: Polynomial, var: str = "T") -> str:
    """Human-readable form for polynomials over the prime field, e.g. ``1 + T^2``."""
    if a.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(a.coeffs):
        if c.is_zero():
            continue
        coef = str(c.to_int()) if c.in_prime_field() else format_element(c)
        if i == 0:
            terms.append(coef)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if coef == "1" else f"{coef}*{mono}")
    return " + ".join(terms)
