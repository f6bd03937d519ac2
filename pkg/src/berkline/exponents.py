"""Exact log-scale arithmetic for magnitudes and disc radii.

Every non-archimedean magnitude handled by this library is written as
``rho**e`` for a fixed but unspecified base ``rho`` in (0, 1).  Only the
exponent ``e`` is stored, as an element of the group Q + Q*sqrt(2).  The
rational part covers every value a coefficient field can produce; the
sqrt(2) part supplies radii that are multiplicatively independent from
all of them, which is exactly what separates the two kinds of disc
points on the line.

Because ``rho < 1``, the order on magnitudes is the reverse of the order
on exponents: a larger exponent means a smaller magnitude, and the zero
magnitude sits below everything.  All comparisons reduce to exact
rational sign tests; no floating point enters any decision.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from math import sqrt
from typing import Optional, Union

from .errors import DomainError, ParseError


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected a rational, got {type(v).__name__}")


@dataclass(frozen=True)
class Exponent:
    """The real number ``a + b*sqrt(2)`` with ``a``, ``b`` exact rationals.

    Instances are immutable values; arithmetic returns new objects.  The
    total order agrees with the real-number order and is decided by the
    sign rule in :meth:`sign`, never by floats.
    """

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))

    # -- group structure ----------------------------------------------

    def __add__(self, other: "Exponent") -> "Exponent":
        if not isinstance(other, Exponent):
            return NotImplemented  # lets INF.__radd__ absorb the sum
        return Exponent(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Exponent") -> "Exponent":
        if not isinstance(other, Exponent):
            return NotImplemented
        return Exponent(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Exponent":
        return Exponent(-self.a, -self.b)

    def scale(self, q) -> "Exponent":
        """Multiply by an exact rational scalar."""
        q = _as_fraction(q)
        return Exponent(self.a * q, self.b * q)

    def __abs__(self) -> "Exponent":
        return -self if self.sign() < 0 else self

    # -- order ---------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(2)``.

        When ``a`` and ``b`` have opposite signs the result hinges on
        whether ``a*a`` beats ``2*b*b``; this is the only place where
        irrationality of sqrt(2) matters (the two squares can tie only
        at zero).
        """
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        lhs, rhs = a * a, 2 * b * b
        if a > 0:  # b < 0: positive iff a > -b*sqrt(2) iff a^2 > 2 b^2
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1  # a < 0, b > 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __lt__(self, other: "Exponent") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "Exponent") -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: "Exponent") -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: "Exponent") -> bool:
        return (self - other).sign() >= 0

    def to_float(self) -> float:
        """Display-only float image; never used in comparisons."""
        return float(self.a) + float(self.b) * sqrt(2.0)

    def __str__(self) -> str:
        return format_exponent(self)


EXP_ZERO = Exponent(0)
EXP_ONE = Exponent(1)


def exp_compare(e1: Exponent, e2: Exponent) -> Ordering:
    """Exact comparison of two exponents as real numbers."""
    return Ordering((e1 - e2).sign())


# ---------------------------------------------------------------------
# Magnitudes


@dataclass(frozen=True)
class Magnitude:
    """Zero, or the positive real ``rho**exponent`` with ``rho`` in (0, 1).

    ``exponent is None`` encodes the zero magnitude.  Multiplication adds
    exponents (zero is absorbing); comparisons invert the exponent order
    because the base is below one.  ``Magnitude.unit()`` is ``rho**0``.
    """

    exponent: Optional[Exponent]

    @staticmethod
    def zero() -> "Magnitude":
        return Magnitude(None)

    @staticmethod
    def finite(e: Exponent) -> "Magnitude":
        if not isinstance(e, Exponent):
            e = Exponent(_as_fraction(e))
        return Magnitude(e)

    @staticmethod
    def unit() -> "Magnitude":
        return Magnitude(EXP_ZERO)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __mul__(self, other: "Magnitude") -> "Magnitude":
        if self.is_zero or other.is_zero:
            return Magnitude.zero()
        return Magnitude(self.exponent + other.exponent)

    def __pow__(self, k: int) -> "Magnitude":
        if self.is_zero:
            if k <= 0:
                raise DomainError("zero magnitude has no non-positive powers")
            return self
        return Magnitude(self.exponent.scale(k))

    def root(self, n: int) -> "Magnitude":
        if n < 1:
            raise DomainError("root index must be a positive integer")
        if self.is_zero:
            return self
        return Magnitude(self.exponent.scale(Fraction(1, n)))

    def __lt__(self, other: "Magnitude") -> bool:
        if self.is_zero:
            return not other.is_zero
        if other.is_zero:
            return False
        return self.exponent > other.exponent  # rho < 1 inverts the order

    def __le__(self, other: "Magnitude") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Magnitude") -> bool:
        return other < self

    def __ge__(self, other: "Magnitude") -> bool:
        return other <= self

    def __str__(self) -> str:
        return format_magnitude(self)


MAG_ZERO = Magnitude.zero()
MAG_ONE = Magnitude.unit()


def mag_mul(m1: Magnitude, m2: Magnitude) -> Magnitude:
    return m1 * m2


def mag_root(m: Magnitude, n: int) -> Magnitude:
    return m.root(n)


def mag_max(*ms: Magnitude) -> Magnitude:
    best = ms[0]
    for m in ms[1:]:
        if m > best:
            best = m
    return best


def is_rational_over_value_group(m: Magnitude, gen: Exponent) -> bool:
    """Does some positive integer power of ``m`` land in the value group?

    ``gen`` is the group's generating exponent (0 for a trivially valued
    field, 1 for the standard p-adic and Puiseux normalizations).  The
    value group is divisible in the Puiseux case and cyclic in the
    p-adic case, but for this question only two facts matter: rational
    exponents are commensurable with any nonzero rational generator, and
    nothing with a sqrt(2) component ever is.
    """
    if not gen.is_rational():
        raise DomainError("value-group generator must be rational")
    if m.is_zero:
        raise DomainError("zero magnitude is not a radius")
    e = m.exponent
    if gen.sign() == 0:
        return e.sign() == 0 and e.is_rational()
    return e.is_rational()


# ---------------------------------------------------------------------
# Lengths: exponents extended by a single point at +infinity, used for
# path lengths and leaf edges of skeleton graphs.


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("berkline-infinite-length")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    def __radd__(self, other):
        return self


INF = _Infinity()

Length = Union[Exponent, _Infinity]


def add_lengths(*xs: Length) -> Length:
    total: Length = EXP_ZERO
    for x in xs:
        if x is INF or total is INF:
            return INF
        total = total + x
    return total


def format_length(x: Length) -> str:
    return "inf" if x is INF else format_exponent(x)


# ---------------------------------------------------------------------
# Text forms.  Canonical emission is "a" when b == 0 and "a+b*s2" (with
# the sign of b folded into the separator) otherwise; parsing accepts
# exactly those shapes, with optional surrounding whitespace.

_RAT = r"-?\d+(?:/\d+)?"
_EXP_RE = re.compile(
    rf"^(?P<a>{_RAT})(?:(?P<sign>[+-])(?P<b>\d+(?:/\d+)?)\*s2)?$"
)


def format_exponent(e: Exponent) -> str:
    if e.b == 0:
        return str(e.a)
    if e.b > 0:
        return f"{e.a}+{e.b}*s2"
    return f"{e.a}-{-e.b}*s2"


def parse_exponent(text: str) -> Exponent:
    s = text.strip().replace(" ", "")
    m = _EXP_RE.match(s)
    if not m:
        raise ParseError("exponent", text)
    try:
        a = Fraction(m.group("a"))
        b = Fraction(0)
        if m.group("b") is not None:
            b = Fraction(m.group("b"))
            if m.group("sign") == "-":
                b = -b
    except ZeroDivisionError:
        raise ParseError("exponent", text, "zero denominator") from None
    return Exponent(a, b)


def format_magnitude(m: Magnitude) -> str:
    if m.is_zero:
        return "0"
    return f"rho^({format_exponent(m.exponent)})"
