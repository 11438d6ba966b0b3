"""Arithmetic in F_p and F_{p^e} in the power basis of a root of the modulus.

Elements are dense coefficient tuples ``(c_0, ..., c_{e-1})`` meaning
``sum c_i * alpha**i``, where ``alpha`` is the class of the modulus variable.
For ``e == 1`` the modulus is ``x`` itself, so ``alpha == 0``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence


class ContextMismatch(ValueError):
    """Operands live in different fields."""


class FieldSyntaxError(ValueError):
    """Text could not be parsed as a field element."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- polynomials over F_p as int lists (low-to-high) -------------------------
# Only what the field construction itself needs; general polynomial work over
# F_q lives in ``cartier.poly``.

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, m, p)


def _ppowmod(a: Sequence[int], n: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while n:
        if n & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        n >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Irreducibility of ``m`` (int coefficients, low-to-high) over F_p.

    Uses Ben-Or's test: ``m`` of degree ``n`` is irreducible iff
    ``gcd(x^(p^d) - x, m) == 1`` for every ``d <= n // 2``.
    """
    m = _trim([c % p for c in m])
    if not m:
        raise ValueError("zero polynomial")
    n = len(m) - 1
    if n == 0:
        return False
    if n == 1:
        return True
    xpow = [0, 1]
    for _ in range(n // 2):
        xpow = _ppowmod(xpow, p, m, p)
        diff = list(xpow) + [0] * max(0, 2 - len(xpow))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(m, diff, p)) > 1:
            return False
    return True


def find_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``n`` over F_p (lexicographic from the constant term)."""
    if n == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=n):
        cand = tail[::-1] + (1,)
        if cand[0] and is_irreducible(cand, p):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


# -- field context -----------------------------------------------------------

@dataclass(frozen=True)
class FieldContext:
    p: int
    e: int = 1
    modulus: tuple[int, ...] = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.p == 2:
            raise ValueError("characteristic 2 is not supported; p must be an odd prime")
        if self.e < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.e}")
        mod = tuple(c % self.p for c in self.modulus)
        if not mod:
            mod = (0, 1) if self.e == 1 else find_irreducible(self.p, self.e)
        object.__setattr__(self, "modulus", mod)
        if len(mod) != self.e + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.e}")
        if self.e == 1 and mod != (0, 1):
            raise ValueError("for e = 1 the modulus is fixed to x")
        if not is_irreducible(mod, self.p):
            raise ValueError(f"modulus {list(mod)} is reducible over F_{self.p}")

    @property
    def q(self) -> int:
        return self.p ** self.e

    @cached_property
    def _reduction(self) -> tuple[tuple[int, ...], ...]:
        # alpha^(e+k) in the power basis, for k = 0..e-2
        e, p = self.e, self.p
        rows = []
        cur = [(-c) % p for c in self.modulus[:-1]]
        for _ in range(max(e - 1, 0)):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c + top * r) % p for c, r in zip(cur, rows[0])]
        return tuple(rows)

    def __call__(self, value) -> "FieldElement":
        return self.element(value)

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            self._check(value.ctx)
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.e - 1))
        if isinstance(value, str):
            return parse_element(self, value)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    @cached_property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.e)

    @cached_property
    def one(self) -> "FieldElement":
        return self.element(1)

    @cached_property
    def gen(self) -> "FieldElement":
        """The residue class alpha of the modulus variable."""
        if self.e == 1:
            return self.zero
        return FieldElement(self, (0, 1) + (0,) * (self.e - 2))

    def elements(self) -> Iterator["FieldElement"]:
        for c in itertools.product(range(self.p), repeat=self.e):
            yield FieldElement(self, c[::-1])

    def _check(self, other: "FieldContext") -> None:
        if other is not self and other != self:
            raise ContextMismatch(f"{other} is not {self}")

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"


# -- elements ----------------------------------------------------------------

class FieldElement:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def __setattr__(self, name, value):
        if hasattr(self, "coeffs"):
            raise AttributeError("FieldElement is immutable")
        object.__setattr__(self, name, value)

    def _other(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            self.ctx._check(other.ctx)
            return other
        if isinstance(other, int):
            return self.ctx.element(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.ctx is other.ctx or self.ctx == other.ctx)

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        e, p = ctx.e, ctx.p
        if e == 1:
            return FieldElement(ctx, (self.coeffs[0] * other.coeffs[0] % p,))
        prod = [0] * (2 * e - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        low = prod[:e]
        for k, row in enumerate(ctx._reduction):
            c = prod[e + k]
            if c:
                for i, r in enumerate(row):
                    low[i] += c * r
        return FieldElement(ctx, tuple(c % p for c in low))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return pow(self.inverse(), -n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in " + repr(self.ctx))
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._other(other) / self

    def __repr__(self):
        return format_element(self)

    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        """Value of an element of the prime subfield as an integer in [0, p)."""
        if not self.in_prime_field():
            raise ValueError(f"{self} is not in the prime subfield")
        return self.coeffs[0]


# -- module-level operations -------------------------------------------------

def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def div(a: FieldElement, b: FieldElement) -> FieldElement:
    return a / b


def power(a: FieldElement, n: int) -> FieldElement:
    if n < 0:
        raise ValueError("exponent must be non-negative")
    return a ** n


def frobenius(a: FieldElement, k: int = 1) -> FieldElement:
    """sigma^k(a) = a^(p^k); k is taken mod e, so k = -1 gives tau."""
    k %= a.ctx.e
    return a ** (a.ctx.p ** k) if k else a


def inv_frobenius(a: FieldElement) -> FieldElement:
    """tau(a) = a^(p^(e-1)), the inverse of the Frobenius automorphism."""
    return a ** (a.ctx.p ** (a.ctx.e - 1))


def is_square(a: FieldElement) -> bool:
    if a.is_zero():
        return True
    return a ** ((a.ctx.q - 1) // 2) == a.ctx.one


def multiplicative_order(a: FieldElement) -> int:
    if a.is_zero():
        raise ZeroDivisionError("zero has no multiplicative order")
    n = a.ctx.q - 1
    order = n
    for r in _prime_factors(n):
        while order % r == 0 and a ** (order // r) == a.ctx.one:
            order //= r
    return order


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- text grammar ------------------------------------------------------------

_INT = re.compile(r"^[+-]?\d+$")
_GEN = re.compile(r"^g\^(\d+)$")
_LIST = re.compile(r"^\[\s*([+-]?\d+(?:\s*,\s*[+-]?\d+)*)\s*\]$")


def parse_element(ctx: FieldContext, text: str) -> FieldElement:
    """Parse ``<int>``, ``g^<k>`` or ``[c0,...,c_{e-1}]``."""
    s = text.strip()
    if _INT.match(s):
        return ctx.element(int(s))
    m = _GEN.match(s)
    if m:
        return ctx.gen ** int(m.group(1))
    m = _LIST.match(s)
    if m:
        coeffs = [int(c) for c in m.group(1).split(",")]
        if len(coeffs) != ctx.e:
            raise FieldSyntaxError(f"{s!r}: expected {ctx.e} coefficients, got {len(coeffs)}")
        return ctx.element(coeffs)
    raise FieldSyntaxError(f"cannot parse field element {text!r}")


def format_element(a: FieldElement) -> str:
    return "[" + ",".join(str(c) for c in a.coeffs) + "]"


def random_element(ctx: FieldContext, rng) -> FieldElement:
    return FieldElement(ctx, tuple(rng.randrange(ctx.p) for _ in range(ctx.e)))
