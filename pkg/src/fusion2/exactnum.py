"""Exact arithmetic in the rationals and real quadratic fields Q(sqrt(D)).

Every number is ``a + b*sqrt(D)`` with rational ``a, b`` and squarefree
``D >= 0``; rationals are canonicalized to ``b = 0, D = 0``.  Equality is
structural and ordering is decided by exact sign analysis, so every
comparison made by the classification routines is a theorem, not a
floating-point guess.

The module also carries the finite catalog of values ``2*cos(2*pi*k/m)``
that are rational or quadratic irrational.  Such a value has algebraic
degree ``phi(m)/2 <= 2`` (for m > 2), which confines the order to
``m in {1, 2, 3, 4, 5, 6, 8, 10, 12}``; the catalog is the complete list
of coprime pairs (m, k) with their exact values.  It is what makes the
root-of-unity searches in the obstruction analysis finite and total.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache


class IncompatibleFieldError(ValueError):
    """Arithmetic or comparison across distinct irrational quadratic fields."""


class ParseError(ValueError):
    """Malformed textual form of a quadratic number."""


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


def squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, d) with n = s*s*d and d squarefree; n must be >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 1, 0
    s, d = 1, 1
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            exp = 0
            while remaining % p == 0:
                remaining //= p
                exp += 1
            s *= p ** (exp // 2)
            if exp % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= remaining
    return s, d


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational value, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadraticNumber:
    """Exact element a + b*sqrt(D) of Q(sqrt(D)), canonicalized on creation.

    Canonical form: D squarefree; D in {0, 1} and perfect-square parts of D
    are folded into the rational components, so equality is componentwise.
    Mixing two distinct irrational fields raises IncompatibleFieldError
    rather than coercing into a degree-4 field.
    """

    a: Fraction
    b: Fraction
    D: int = 0

    def __post_init__(self):
        a = _as_fraction(self.a)
        b = _as_fraction(self.b)
        D = self.D
        if not isinstance(D, int) or D < 0:
            raise ValueError(f"D must be a nonnegative integer, got {D!r}")
        s, d = squarefree_split(D)
        if s != 1:
            b, D = b * s, d
        if D == 1:
            a, b, D = a + b, Fraction(0), 0
        if b == 0 or D == 0:
            b, D = Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", D)

    # -- constructors -------------------------------------------------

    @classmethod
    def rational(cls, x) -> QuadraticNumber:
        return cls(_as_fraction(x), Fraction(0), 0)

    @classmethod
    def sqrt_int(cls, n: int) -> QuadraticNumber:
        """Exact square root of a nonnegative integer."""
        return cls(Fraction(0), Fraction(1), n)

    # -- field bookkeeping --------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def _joint_field(self, other: QuadraticNumber) -> int:
        if self.b == 0:
            return other.D
        if other.b == 0:
            return self.D
        if self.D != other.D:
            raise IncompatibleFieldError(
                f"cannot combine sqrt({self.D}) with sqrt({other.D})"
            )
        return self.D

    @staticmethod
    def _coerce(x) -> QuadraticNumber:
        if isinstance(x, QuadraticNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadraticNumber.rational(x)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> QuadraticNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        D = self._joint_field(other)
        return QuadraticNumber(self.a + other.a, self.b + other.b, D)

    __radd__ = __add__

    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self.a, -self.b, self.D)

    def __sub__(self, other) -> QuadraticNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QuadraticNumber:
        return (-self) + other

    def __mul__(self, other) -> QuadraticNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        D = self._joint_field(other)
        a = self.a * other.a + self.b * other.b * D
        b = self.a * other.b + self.b * other.a
        return QuadraticNumber(a, b, D)

    __rmul__ = __mul__

    def inverse(self) -> QuadraticNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        norm = self.a * self.a - self.b * self.b * self.D
        # norm = 0 with (a, b) != 0 would force D to be a rational square,
        # impossible in canonical form.
        return QuadraticNumber(self.a / norm, -self.b / norm, self.D)

    def __truediv__(self, other) -> QuadraticNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._joint_field(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> QuadraticNumber:
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> QuadraticNumber:
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadraticNumber.rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sign(self) -> int:
        """Exact sign in the real embedding (sqrt(D) > 0)."""
        a, b, D = self.a, self.b, self.D
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: compare a^2 against b^2 * D
        lhs, rhs = a * a, b * b * D
        if a > 0:  # b < 0
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return 1 if rhs > lhs else (-1 if rhs < lhs else 0)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.a, self.b, self.D) == (other.a, other.b, other.D)

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() >= 0

    def __abs__(self) -> QuadraticNumber:
        return -self if self.sign() < 0 else self

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"QuadraticNumber({render(self)!r})"


ZERO = QuadraticNumber.rational(0)
ONE = QuadraticNumber.rational(1)


def qn_arith(x: QuadraticNumber, y: QuadraticNumber, op: str) -> QuadraticNumber:
    """Named dispatch for the four field operations."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def qn_compare(x: QuadraticNumber, y: QuadraticNumber) -> Ordering:
    """Exact three-way comparison in the real order."""
    x = QuadraticNumber._coerce(x)
    y = QuadraticNumber._coerce(y)
    return Ordering((x - y).sign())


def galois_conjugate(x: QuadraticNumber) -> QuadraticNumber:
    """The nontrivial field automorphism sqrt(D) -> -sqrt(D); fixes Q."""
    return QuadraticNumber(x.a, -x.b, x.D)


def solve_monic_quadratic(p, q) -> tuple[QuadraticNumber, QuadraticNumber]:
    """Exact roots of x^2 + p*x + q = 0 with rational p, q; larger root first.

    The radicand p^2 - 4q must be nonnegative; its squarefree part becomes
    the field discriminant D of the roots.
    """
    p = _as_fraction(p)
    q = _as_fraction(q)
    disc = p * p - 4 * q
    if disc < 0:
        raise ValueError(f"no real root: discriminant {disc} < 0")
    # sqrt(num/den) = sqrt(num*den)/den
    radicand = disc.numerator * disc.denominator
    s, d = squarefree_split(radicand)
    half_sqrt = Fraction(s, 2 * disc.denominator)
    root_plus = QuadraticNumber(-p / 2, half_sqrt, d)
    root_minus = QuadraticNumber(-p / 2, -half_sqrt, d)
    return root_plus, root_minus


# -- the 2*cos(2*pi*k/m) catalog ---------------------------------------


@dataclass(frozen=True)
class TwoCosValue:
    """Designator (m, k) of a root of unity exp(2*pi*i*k/m), gcd(k, m) = 1,
    together with the exact value 2*cos(2*pi*k/m).

    1 <= k < m except for m = 1, where k = 1 designates the root 1 itself.
    """

    m: int
    k: int
    value: QuadraticNumber

    def __post_init__(self):
        if self.m < 1 or math.gcd(self.k, self.m) != 1:
            raise ValueError(f"(m, k) = ({self.m}, {self.k}) not coprime")
        if self.m > 1 and not 1 <= self.k < self.m:
            raise ValueError(f"k = {self.k} out of range for m = {self.m}")


def _half(x: QuadraticNumber) -> QuadraticNumber:
    return x / 2


_SQRT5 = QuadraticNumber.sqrt_int(5)
_GOLDEN = _half(ONE + _SQRT5)          # 2*cos(pi/5)
_GOLDEN_CONJ = _half(ONE - _SQRT5)     # 2*cos(3*pi/5)
_FIFTH = _half(-ONE + _SQRT5)          # 2*cos(2*pi/5)
_FIFTH_CONJ = _half(-ONE - _SQRT5)     # 2*cos(4*pi/5)
_SQRT2 = QuadraticNumber.sqrt_int(2)
_SQRT3 = QuadraticNumber.sqrt_int(3)


@lru_cache(maxsize=1)
def two_cos_catalog() -> tuple[TwoCosValue, ...]:
    """All (m, k) with gcd(k, m) = 1 whose 2*cos(2*pi*k/m) has degree <= 2.

    Complete: any root of unity whose ``theta + 1/theta`` is rational or a
    quadratic irrational appears here (both k and m - k are listed, so the
    pair theta, 1/theta is covered).  The table is validated by tests via
    the Chebyshev recurrence t_{j+1} = v*t_j - t_{j-1}, which must return
    to 2 exactly at step m and not before.
    """
    two = QuadraticNumber.rational(2)
    entries = [
        (1, 1, two),
        (2, 1, -two),
        (3, 1, -ONE), (3, 2, -ONE),
        (4, 1, ZERO), (4, 3, ZERO),
        (5, 1, _FIFTH), (5, 2, _FIFTH_CONJ), (5, 3, _FIFTH_CONJ), (5, 4, _FIFTH),
        (6, 1, ONE), (6, 5, ONE),
        (8, 1, _SQRT2), (8, 3, -_SQRT2), (8, 5, -_SQRT2), (8, 7, _SQRT2),
        (10, 1, _GOLDEN), (10, 3, _GOLDEN_CONJ),
        (10, 7, _GOLDEN_CONJ), (10, 9, _GOLDEN),
        (12, 1, _SQRT3), (12, 5, -_SQRT3), (12, 7, -_SQRT3), (12, 11, _SQRT3),
    ]
    return tuple(TwoCosValue(m, k, v) for m, k, v in entries)


# -- textual form -------------------------------------------------------

_RATIONAL_RE = r"[+-]?\d+(?:/\d+)?"
_COEF_RE = r"\d+(?:/\d+)?"
_TWO_TERM = re.compile(
    rf"\s*({_RATIONAL_RE})\s*([+-])\s*(?:({_COEF_RE})\s*\*\s*)?"
    rf"sqrt\(\s*(\d+)\s*\)\s*"
)
_RADICAL = re.compile(
    rf"\s*([+-]?)\s*(?:({_COEF_RE})\s*\*\s*)?sqrt\(\s*(\d+)\s*\)\s*"
)
_RATIONAL = re.compile(rf"\s*({_RATIONAL_RE})\s*")


def render(x: QuadraticNumber) -> str:
    """Lowest-terms textual form, e.g. ``1/2 + 1/2*sqrt(5)`` or ``-2``."""
    if x.b == 0:
        return str(x.a)
    radical = f"{abs(x.b)}*sqrt({x.D})"
    if x.a == 0:
        return radical if x.b > 0 else f"-{radical}"
    sign = "+" if x.b > 0 else "-"
    return f"{x.a} {sign} {radical}"


def parse(text: str) -> QuadraticNumber:
    """Inverse of :func:`render`; also accepts a bare ``sqrt(D)``."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    m = _TWO_TERM.fullmatch(text)
    if m:
        rat, sign, coef, d = m.groups()
        b = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            b = -b
        return QuadraticNumber(Fraction(rat), b, int(d))
    m = _RADICAL.fullmatch(text)
    if m:
        sign, coef, d = m.groups()
        b = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            b = -b
        return QuadraticNumber(Fraction(0), b, int(d))
    m = _RATIONAL.fullmatch(text)
    if m:
        return QuadraticNumber.rational(Fraction(m.group(1)))
    raise ParseError(f"cannot parse quadratic number from {text!r}")
