"""Exact scalars: binary finite fields GF(2^e), the field Q(sqrt2, sqrt3), 2-adic valuations.

Finite-field elements are stored as integers ``0 <= v < 2**e`` whose bits are the
coefficients of a polynomial residue modulo a fixed primitive polynomial.  Bulk
arithmetic (inside matrices) goes through the lookup tables of :class:`GF`; the
:class:`Gf` wrapper is the scalar-level interface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

# Primitive polynomials, bit i = coefficient of x^i.  x generates the unit group.
MODULI = {
    1: 0b11,  # x + 1
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    6: 0b1000011,  # x^6 + x + 1
    7: 0b10000011,  # x^7 + x + 1
    8: 0b100011101,  # x^8 + x^4 + x^3 + x^2 + 1
}


class MixedFields(TypeError):
    pass


class NotIntegral(ValueError):
    pass


def _polymulmod(a: int, b: int, modulus: int, e: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> e & 1:
            a ^= modulus
    return r


class GF:
    """The field GF(2^e) with tables for vectorised arithmetic."""

    def __init__(self, e: int):
        if e not in MODULI:
            raise ValueError(f"exponent must be in 1..8, got {e}")
        self.e = e
        self.order = 1 << e
        self.modulus = MODULI[e]
        q = self.order
        exp = [0] * (2 * (q - 1)) if q > 2 else [1, 1]
        log = [0] * q
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = _polymulmod(x, 0b10 if e > 1 else 1, self.modulus, e)
        for k in range(q - 1, len(exp)):
            exp[k] = exp[k - (q - 1)]
        self.exp = exp
        self.log = log
        mul = np.zeros((q, q), dtype=np.uint8)
        for a in range(1, q):
            for b in range(1, q):
                mul[a, b] = exp[(log[a] + log[b]) % (q - 1)]
        self.mul_table = mul
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            inv[a] = exp[(-log[a]) % (q - 1)]
        self.inv_table = inv

    def __repr__(self) -> str:
        return f"GF({self.order})"

    def __reduce__(self):
        return (field, (self.e,))

    # integer-level arithmetic -------------------------------------------------
    def mul(self, a, b):
        """Elementwise product; accepts ints or integer arrays (broadcasting)."""
        return self.mul_table[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self.inv_table[a]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if n == 0 else 0
        return self.exp[(self.log[a] * n) % (self.order - 1)]

    def frobenius(self, a: int) -> int:
        return int(self.mul_table[a, a])

    def generator(self) -> int:
        """The fixed multiplicative generator (the residue of x)."""
        return 2 if self.e > 1 else 1

    def elements(self):
        return range(self.order)

    def __call__(self, value: int) -> "Gf":
        return Gf(self, value)


@lru_cache(maxsize=None)
def field(e: int) -> GF:
    return GF(e)


GF2 = field(1)
GF4 = field(2)
GF16 = field(4)


def embedding(src: GF, dst: GF) -> np.ndarray:
    """Table of the field embedding src -> dst sending x to the smallest root of src's modulus."""
    if dst.e % src.e:
        raise ValueError(f"{src} does not embed in {dst}")
    if src.e == 1:
        return np.array([0, 1], dtype=np.uint8)
    root = None
    for r in range(2, dst.order):
        acc = 0
        for i in range(src.e, -1, -1):
            acc = int(dst.mul_table[acc, r]) ^ (src.modulus >> i & 1)
        if acc == 0:
            root = r
            break
    table = np.zeros(src.order, dtype=np.uint8)
    for v in range(src.order):
        acc, power = 0, 1
        for i in range(src.e):
            if v >> i & 1:
                acc ^= power
            power = int(dst.mul_table[power, root])
        table[v] = acc
    return table


@dataclass(frozen=True)
class Gf:
    """An element of GF(2^e)."""

    field: GF
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise ValueError(f"{self.value} is not an element of {self.field}")

    def _check(self, other: "Gf") -> None:
        if not isinstance(other, Gf):
            raise TypeError(f"expected Gf, got {type(other).__name__}")
        if other.field is not self.field:
            raise MixedFields(f"{self.field} vs {other.field}")

    def __add__(self, other: "Gf") -> "Gf":
        self._check(other)
        return Gf(self.field, self.value ^ other.value)

    __sub__ = __add__

    def __neg__(self) -> "Gf":
        return self

    def __mul__(self, other: "Gf") -> "Gf":
        self._check(other)
        return Gf(self.field, int(self.field.mul_table[self.value, other.value]))

    def inverse(self) -> "Gf":
        if self.value == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.field}")
        return Gf(self.field, int(self.field.inv_table[self.value]))

    def __truediv__(self, other: "Gf") -> "Gf":
        self._check(other)
        return self * other.inverse()

    def __pow__(self, n: int) -> "Gf":
        return Gf(self.field, self.field.pow(self.value, n))

    def frobenius(self) -> "Gf":
        return self * self

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"Gf({self.field.order}, {self.value})"


def gf_arith(a: Gf, b: Gf | None, op: str) -> Gf:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown op {op!r}")


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Quad:
    """a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational coordinates."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _frac(getattr(self, name)))

    @classmethod
    def coerce(cls, x) -> "Quad":
        if isinstance(x, Quad):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Quad")

    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other) -> "Quad":
        o = Quad.coerce(other)
        return Quad(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self) -> "Quad":
        return Quad(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other) -> "Quad":
        return self + (-Quad.coerce(other))

    def __rsub__(self, other) -> "Quad":
        return Quad.coerce(other) - self

    def __mul__(self, other) -> "Quad":
        o = Quad.coerce(other)
        a1, b1, c1, d1 = self.coords()
        a2, b2, c2, d2 = o.coords()
        return Quad(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def conj2(self) -> "Quad":
        return Quad(self.a, -self.b, self.c, -self.d)

    def conj3(self) -> "Quad":
        return Quad(self.a, self.b, -self.c, -self.d)

    def norm(self) -> Fraction:
        """Product of the four Galois conjugates (a rational number)."""
        n = self * self.conj2() * self.conj3() * self.conj2().conj3()
        assert n.is_rational()
        return n.a

    def inverse(self) -> "Quad":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt3)")
        others = self.conj2() * self.conj3() * self.conj2().conj3()
        return others * Fraction(1, self.norm())

    def __truediv__(self, other) -> "Quad":
        o = Quad.coerce(other)
        if o.is_rational():
            if o.a == 0:
                raise ZeroDivisionError("division by zero")
            return Quad(self.a / o.a, self.b / o.a, self.c / o.a, self.d / o.a)
        return self * o.inverse()

    def __pow__(self, n: int) -> "Quad":
        if n < 0:
            return self.inverse() ** (-n)
        out, base = Quad(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        try:
            o = Quad.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coords() == o.coords()

    def __hash__(self) -> int:
        return hash(self.coords())

    def __bool__(self) -> bool:
        return any(self.coords())

    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def is_integral(self) -> bool:
        # integral basis 1, sqrt2, sqrt3, (sqrt2 + sqrt6)/2
        a, b, c, d = self.coords()
        return (
            a.denominator == 1
            and c.denominator == 1
            and (2 * b).denominator == 1
            and (2 * d).denominator == 1
            and (b - d).denominator == 1
        )

    def __repr__(self) -> str:
        return f"Quad({self})"

    def __str__(self) -> str:
        parts = []
        for coef, sym in zip(self.coords(), ("", "√2", "√3", "√6")):
            if coef == 0:
                continue
            mag = abs(coef)
            text = sym if (mag == 1 and sym) else f"{mag}{sym}"
            parts.append(("-" if coef < 0 else "+", text))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


SQRT2 = Quad(0, 1)
SQRT3 = Quad(0, 0, 1)
SQRT6 = Quad(0, 0, 0, 1)


def quad_arith(a: Quad, b: Quad | None, op: str) -> Quad:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "conj2":
        return a.conj2()
    if op == "conj3":
        return a.conj3()
    raise ValueError(f"unknown op {op!r}")


def reduce_mod2(x) -> Gf:
    """Residue of an algebraic integer of Q(sqrt2, sqrt3) at the prime above 2.

    The residue field is GF(2); sqrt2 and sqrt6 go to 0, sqrt3 and
    (sqrt2 + sqrt6)/2 go to 1.
    """
    x = Quad.coerce(x)
    if not x.is_integral():
        raise NotIntegral(f"{x} is not an algebraic integer")
    a, b, c, d = x.coords()
    return GF2(int(a + c + 2 * d) % 2)


def val2(x) -> int | float:
    """2-adic valuation of a rational; +inf at zero."""
    x = _frac(x)
    if x == 0:
        return math.inf
    num, den = x.numerator, x.denominator
    return ((num & -num).bit_length() - 1) - ((den & -den).bit_length() - 1)
