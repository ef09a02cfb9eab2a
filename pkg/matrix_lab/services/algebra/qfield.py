"""
Exact arithmetic in Q and in real quadratic fields Q(sqrt(d))

Rationals are `fractions.Fraction`; a `QuadNum` is a + b*sqrt(d) with
rational a, b and a squarefree radicand d. d == 1 is the canonical
encoding of a purely rational value (b is then always 0).
"""
from __future__ import annotations

import math
import operator
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Tuple, Union

from ...exceptions import RadicandMismatchError

Rational = Fraction

Scalar = Union[int, Fraction, 'QuadNum']

# Bits of headroom used when approximating b*sqrt(d) for float rendering.
_FLOAT_GUARD_BITS = 96


def squarefree_decompose(n: int) -> Tuple[int, int]:
    """
    Split n into s**2 * m with m squarefree

    Args:
        n: positive integer

    Returns:
        (s, m)
    """
    if n < 1:
        raise ValueError(f"squarefree_decompose needs n >= 1, got {n}")

    square_part, free_part = 1, 1
    rest = n
    p = 2
    while p * p <= rest:
        exponent = 0
        while rest % p == 0:
            rest //= p
            exponent += 1
        square_part *= p ** (exponent // 2)
        if exponent % 2:
            free_part *= p
        p += 1 if p == 2 else 2
    free_part *= rest
    return square_part, free_part


def _sign(x: Union[int, Fraction]) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QuadNum:
    """Element a + b*sqrt(d) of Q(sqrt(d)); immutable"""

    __slots__ = ('_a', '_b', '_d')

    def __init__(self, a: Union[int, Fraction] = 0, b: Union[int, Fraction] = 0, d: int = 1) -> None:
        a = Fraction(a)
        b = Fraction(b)
        if d < 0:
            raise ValueError(f"radicand must be non-negative, got {d}")
        if d == 0:
            b = Fraction(0)
            d = 1
        else:
            s, m = squarefree_decompose(d)
            b *= s
            d = m
        if d == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            d = 1
        self._a = a
        self._b = b
        self._d = d

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    @classmethod
    def sqrt(cls, n: Union[int, Fraction]) -> QuadNum:
        """sqrt(n) for rational n >= 0, stored as (1/q)*s*sqrt(m)"""
        n = Fraction(n)
        if n < 0:
            raise ValueError(f"sqrt of a negative rational: {n}")
        p, q = n.numerator, n.denominator
        s, m = squarefree_decompose(p * q) if p else (0, 1)
        return cls(0, Fraction(s, q), m) if m != 1 else cls(Fraction(s, q))

    # -- coercion ----------------------------------------------------------

    @classmethod
    def coerce(cls, value: Scalar) -> QuadNum:
        if isinstance(value, QuadNum):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot use {type(value).__name__} as a QuadNum")

    def _radicand_with(self, other: QuadNum) -> int:
        if self._d == 1:
            return other._d
        if other._d == 1 or other._d == self._d:
            return self._d
        raise RadicandMismatchError(self._d, other._d)

    # -- field operations --------------------------------------------------

    def __add__(self, other: Scalar) -> QuadNum:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._radicand_with(other)
        return QuadNum(self._a + other._a, self._b + other._b, d)

    __radd__ = __add__

    def __neg__(self) -> QuadNum:
        return QuadNum(-self._a, -self._b, self._d)

    def __pos__(self) -> QuadNum:
        return self

    def __sub__(self, other: Scalar) -> QuadNum:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> QuadNum:
        return self.coerce(other) - self

    def __mul__(self, other: Scalar) -> QuadNum:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._radicand_with(other)
        a = self._a * other._a + self._b * other._b * d
        b = self._a * other._b + self._b * other._a
        return QuadNum(a, b, d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadNum:
        return QuadNum(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """a**2 - b**2*d, i.e. self times its conjugate"""
        return self._a * self._a - self._b * self._b * self._d

    def inverse(self) -> QuadNum:
        if not self:
            raise ZeroDivisionError("QuadNum division by zero")
        n = self.norm()
        return QuadNum(self._a / n, -self._b / n, self._d)

    def __truediv__(self, other: Scalar) -> QuadNum:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        self._radicand_with(other)
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> QuadNum:
        return self.coerce(other) / self

    def __pow__(self, exponent: int) -> QuadNum:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadNum(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __abs__(self) -> QuadNum:
        return -self if self.sign() < 0 else self

    # -- comparison --------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d), decided on integers only"""
        sa, sb = _sign(self._a), _sign(self._b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: whichever of a**2 and b**2*d dominates wins
        return sa if self.norm() > 0 else sb

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        if isinstance(other, QuadNum):
            return (self._a, self._b, self._d) == (other._a, other._b, other._d)
        return NotImplemented

    def __lt__(self, other: Scalar) -> bool:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    # -- rendering ---------------------------------------------------------

    def __float__(self) -> float:
        return qnum_to_float(self)

    def __repr__(self) -> str:
        return f"QuadNum({self._a!s}, {self._b!s}, {self._d})"

    def __str__(self) -> str:
        return format_quadnum(self)


def qnum_arith(op: str, u: Scalar, v: Optional[Scalar] = None) -> QuadNum:
    """
    Named field operation, for callers that pick the operation at run time

    Args:
        op: one of add, sub, mul, div, neg
        u, v: operands (v is ignored for neg)
    """
    u = QuadNum.coerce(u)
    if op == 'neg':
        return -u
    binary = {
        'add': operator.add,
        'sub': operator.sub,
        'mul': operator.mul,
        'div': operator.truediv,
    }
    if op not in binary:
        raise ValueError(f"unknown QuadNum operation: {op}")
    if v is None:
        raise ValueError(f"{op} needs two operands")
    return binary[op](u, QuadNum.coerce(v))


def qnum_cmp(u: Scalar, v: Scalar) -> int:
    """-1, 0 or 1 as u <, ==, > v, decided exactly"""
    return (QuadNum.coerce(u) - QuadNum.coerce(v)).sign()


def _sqrt_term(b: Fraction, d: int) -> Fraction:
    # b*sqrt(d) truncated toward zero, relative error below 2**-_FLOAT_GUARD_BITS
    p, q = b.numerator, b.denominator
    root = math.isqrt((p * p * d) << (2 * _FLOAT_GUARD_BITS))
    return _sign(p) * Fraction(root, q << _FLOAT_GUARD_BITS)


def qnum_to_float(u: Scalar) -> float:
    """Double-precision value of u, free of cancellation error"""
    u = QuadNum.coerce(u)
    if u.is_rational:
        return float(u.a)
    term = _sqrt_term(u.b, u.d)
    if u.a == 0 or _sign(u.a) == _sign(u.b):
        return float(u.a + term)
    # a and b*sqrt(d) nearly cancel; go through the conjugate instead
    return float(u.norm() / (u.a - term))


def format_quadnum(u: Scalar) -> str:
    """Canonical text: `p/q` or `p/q + r/s*sqrt(d)`"""
    u = QuadNum.coerce(u)
    head = f"{u.a.numerator}/{u.a.denominator}"
    if u.is_rational:
        return head
    return f"{head} + {u.b.numerator}/{u.b.denominator}*sqrt({u.d})"


def parse_quadnum(text: str) -> QuadNum:
    """Inverse of format_quadnum"""
    text = text.strip()
    try:
        if '*sqrt(' not in text:
            return QuadNum(Fraction(text))
        rational_part, radical_part = text.split(' + ', 1)
        coefficient, radicand = radical_part.split('*sqrt(', 1)
        if not radicand.endswith(')'):
            raise ValueError(text)
        return QuadNum(Fraction(rational_part), Fraction(coefficient), int(radicand[:-1]))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a canonical QuadNum: {text!r}") from e
