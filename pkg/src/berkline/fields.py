"""Exact valued coefficient fields and their residue arithmetic.

Three backends share one duck-typed interface, in the style of a
computer-algebra coefficient domain: the field object owns all the
arithmetic, and elements are plain values.

* ``PAdicField(p)``: the rationals with the p-adic valuation.  Elements
  are ``Fraction``; the residue field is F_p.
* ``PuiseuxField(base)``: finite-support sums ``sum c_i * t^(g_i)`` with
  rational exponents ``g_i`` and coefficients in Q or F_p, ordered by
  exponent, valued by the smallest exponent.  Elements are tuples of
  ``(Fraction, coefficient)`` pairs.  Finite support makes this a ring
  whose units are the monomials, so ``inv`` is partial by design.
* ``TrivialField(base)``: the base field with the trivial valuation
  (every nonzero element has magnitude one, and is its own residue).

Magnitudes come back as :class:`berkline.exponents.Magnitude` values in
log scale, so ``valuation(p) == rho**1`` for ``PAdicField(p)`` and
``valuation(t) == rho**1`` for any Puiseux backend.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple, Union

from .errors import DomainError, ParseError
from .exponents import EXP_ZERO, Exponent, Magnitude


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------
# Base / residue fields


@dataclass(frozen=True)
class Rationals:
    """The rational numbers as a coefficient or residue field."""

    @property
    def char(self) -> int:
        return 0

    @property
    def name(self) -> str:
        return "Q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise DomainError("division by zero in Q")
        return 1 / Fraction(x)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x) -> bool:
        return x == 0

    def is_square(self, x) -> bool:
        if x < 0:
            return False
        n, d = x.numerator, x.denominator
        return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d

    def format(self, x) -> str:
        return str(Fraction(x))

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError("rational", text) from None


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p; elements are ints reduced into [0, p)."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def char(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"F{self.p}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise DomainError(f"division by zero in F_{self.p}")
        return pow(x, -1, self.p)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def is_square(self, x) -> bool:
        x %= self.p
        if x == 0 or self.p == 2:
            return True
        return pow(x, (self.p - 1) // 2, self.p) == 1

    def format(self, x) -> str:
        return str(x % self.p)

    def parse(self, text: str) -> int:
        try:
            return int(text.strip()) % self.p
        except ValueError:
            raise ParseError("prime-field element", text) from None


QQ = Rationals()

BaseField = Union[Rationals, PrimeField]


def parse_base_field(name: str) -> BaseField:
    name = name.strip()
    if name == "Q":
        return QQ
    m = re.match(r"^F(\d+)$", name)
    if m:
        try:
            return PrimeField(int(m.group(1)))
        except DomainError as exc:
            raise ParseError("base field", name, str(exc)) from None
    raise ParseError("base field", name)


# ---------------------------------------------------------------------
# p-adic rationals


@dataclass(frozen=True)
class PAdicField:
    """Q with the p-adic valuation; ``|p| = rho`` in log scale."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def selector(self) -> str:
        return f"padic:{self.p}"

    @property
    def char(self) -> int:
        return 0

    @property
    def residue_char(self) -> int:
        return self.p

    @property
    def residue_field(self) -> PrimeField:
        return PrimeField(self.p)

    @property
    def value_group_gen(self) -> Exponent:
        return Exponent(1)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise DomainError("division by zero")
        return 1 / Fraction(x)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x) -> bool:
        return x == 0

    def _vp(self, n: int) -> int:
        v = 0
        while n % self.p == 0:
            n //= self.p
            v += 1
        return v

    def valuation(self, x) -> Magnitude:
        """``rho**(v_p(num) - v_p(den))``, or zero for ``x == 0``."""
        x = Fraction(x)
        if x == 0:
            return Magnitude.zero()
        v = self._vp(x.numerator if x > 0 else -x.numerator) - self._vp(x.denominator)
        return Magnitude.finite(Exponent(v))

    def residue(self, x) -> int:
        """Image in F_p of an element with ``|x| <= 1``."""
        x = Fraction(x)
        if x == 0:
            return 0
        val = self.valuation(x)
        if val > Magnitude.unit():
            raise DomainError("not integral: magnitude exceeds one")
        if val < Magnitude.unit():
            return 0
        return (x.numerator * pow(x.denominator, -1, self.p)) % self.p

    def residue_of_quotient(self, x, m) -> int:
        """Residue of ``x / m`` for ``|x| <= |m|``, ``m != 0``."""
        return self.residue(self.div(x, m))

    def element_with_valuation(self, e: Exponent) -> Optional[Fraction]:
        if not e.is_rational() or e.a.denominator != 1:
            return None
        return Fraction(self.p) ** int(e.a)

    def format_element(self, x) -> str:
        return str(Fraction(x))

    def parse_element(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip().replace(" ", ""))
        except (ValueError, ZeroDivisionError):
            raise ParseError("p-adic element", text) from None


# ---------------------------------------------------------------------
# Finite-support Puiseux sums

PuiseuxElem = Tuple[Tuple[Fraction, object], ...]


@dataclass(frozen=True)
class PuiseuxField:
    """Finite sums ``c_1*t^(g_1) + ...`` with rational exponents.

    The support of each element is sorted by exponent and carries no
    zero coefficients, so equality of tuples is equality of elements.
    The valuation reads off the smallest exponent.  Only monomials have
    finite-support inverses; ``inv`` refuses everything else rather than
    truncate a series.
    """

    base: BaseField

    @property
    def selector(self) -> str:
        return f"puiseux:{self.base.name}"

    @property
    def char(self) -> int:
        return self.base.char

    @property
    def residue_char(self) -> int:
        return self.base.char

    @property
    def residue_field(self) -> BaseField:
        return self.base

    @property
    def value_group_gen(self) -> Exponent:
        return Exponent(1)

    @property
    def zero(self) -> PuiseuxElem:
        return ()

    @property
    def one(self) -> PuiseuxElem:
        return ((Fraction(0), self.base.one),)

    @property
    def t(self) -> PuiseuxElem:
        return ((Fraction(1), self.base.one),)

    def monomial(self, g, c=None) -> PuiseuxElem:
        c = self.base.one if c is None else c
        if self.base.is_zero(c):
            return ()
        return ((Fraction(g), c),)

    def from_int(self, n: int) -> PuiseuxElem:
        c = self.base.from_int(n)
        if self.base.is_zero(c):
            return ()
        return ((Fraction(0), c),)

    def _normalize(self, terms) -> PuiseuxElem:
        out = [(g, c) for g, c in sorted(terms.items()) if not self.base.is_zero(c)]
        return tuple(out)

    def add(self, x: PuiseuxElem, y: PuiseuxElem) -> PuiseuxElem:
        acc = dict(x)
        for g, c in y:
            acc[g] = self.base.add(acc.get(g, self.base.zero), c)
        return self._normalize(acc)

    def neg(self, x: PuiseuxElem) -> PuiseuxElem:
        return tuple((g, self.base.neg(c)) for g, c in x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x: PuiseuxElem, y: PuiseuxElem) -> PuiseuxElem:
        acc: dict = {}
        for g1, c1 in x:
            for g2, c2 in y:
                g = g1 + g2
                prod = self.base.mul(c1, c2)
                acc[g] = self.base.add(acc.get(g, self.base.zero), prod)
        return self._normalize(acc)

    def inv(self, x: PuiseuxElem) -> PuiseuxElem:
        if not x:
            raise DomainError("division by zero")
        if len(x) != 1:
            raise DomainError(
                "only monomials are invertible in finite support; "
                "general inverses would be infinite series"
            )
        g, c = x[0]
        return ((-g, self.base.inv(c)),)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x) -> bool:
        return not x

    def valuation(self, x: PuiseuxElem) -> Magnitude:
        if not x:
            return Magnitude.zero()
        return Magnitude.finite(Exponent(x[0][0]))

    def leading_coefficient(self, x: PuiseuxElem):
        if not x:
            raise DomainError("zero has no leading coefficient")
        return x[0][1]

    def residue(self, x: PuiseuxElem):
        if not x:
            return self.base.zero
        if x[0][0] < 0:
            raise DomainError("not integral: magnitude exceeds one")
        if x[0][0] > 0:
            return self.base.zero
        return x[0][1]

    def residue_of_quotient(self, x: PuiseuxElem, m: PuiseuxElem):
        """Residue of ``x/m`` for ``|x| <= |m|``, without forming ``x/m``.

        Only the leading terms can contribute: when the valuations tie
        the quotient is a unit whose residue is the ratio of leading
        coefficients, and otherwise the quotient sits inside the maximal
        ideal.
        """
        if not m:
            raise DomainError("division by zero")
        if not x:
            return self.base.zero
        vx, vm = x[0][0], m[0][0]
        if vx < vm:
            raise DomainError("not integral: magnitude exceeds one")
        if vx > vm:
            return self.base.zero
        return self.base.div(x[0][1], m[0][1])

    def element_with_valuation(self, e: Exponent) -> Optional[PuiseuxElem]:
        if not e.is_rational():
            return None
        return self.monomial(e.a)

    # -- text form ------------------------------------------------------

    def format_element(self, x: PuiseuxElem) -> str:
        if not x:
            return "0"
        parts = []
        for g, c in x:
            ctext = self.base.format(c)
            if g == 0:
                parts.append(ctext)
                continue
            tpow = "t" if g == 1 else f"t^({g})"
            if ctext == "1":
                parts.append(tpow)
            elif ctext == "-1":
                parts.append(f"-{tpow}")
            else:
                parts.append(f"{ctext}*{tpow}")
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += "-" + part[1:]
            else:
                out += "+" + part
        return out

    def parse_element(self, text: str) -> PuiseuxElem:
        s = text.strip().replace(" ", "")
        if not s:
            raise ParseError("puiseux element", text, "empty")
        acc: dict = {}
        for term in _split_terms(s, "puiseux element", text):
            g, c = self._parse_term(term, text)
            c = self.base.add(acc.get(g, self.base.zero), c)
            acc[g] = c
        return self._normalize(acc)

    def _parse_term(self, term: str, original: str):
        m = re.match(
            r"^(?P<coef>.+?\*|[+-]?)?t(?:\^\((?P<g>-?\d+(?:/\d+)?)\))?$", term
        )
        if m and "t" in term:
            g = Fraction(m.group("g")) if m.group("g") else Fraction(1)
            coef = m.group("coef") or ""
            coef = coef.rstrip("*")
            if coef in ("", "+"):
                c = self.base.one
            elif coef == "-":
                c = self.base.neg(self.base.one)
            else:
                c = self.base.parse(coef)
            return g, c
        try:
            return Fraction(0), self.base.parse(term)
        except ParseError:
            raise ParseError("puiseux element", original, f"bad term {term!r}") from None


def _split_terms(s: str, rule: str, original: str):
    """Split on top-level ``+``/``-``, folding signs into the terms."""
    terms = []
    cur = ""
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(rule, original, "unbalanced parentheses")
        if ch in "+-" and depth == 0 and cur:
            terms.append(cur)
            cur = "-" if ch == "-" else ""
            continue
        if ch == "+" and depth == 0 and not cur:
            continue
        cur += ch
    if depth != 0:
        raise ParseError(rule, original, "unbalanced parentheses")
    if cur:
        terms.append(cur)
    if not terms:
        raise ParseError(rule, original, "no terms")
    return terms


# ---------------------------------------------------------------------
# Trivially valued base field


@dataclass(frozen=True)
class TrivialField:
    """A base field carrying the trivial valuation."""

    base: BaseField

    @property
    def selector(self) -> str:
        return f"trivial:{self.base.name}"

    @property
    def char(self) -> int:
        return self.base.char

    @property
    def residue_char(self) -> int:
        return self.base.char

    @property
    def residue_field(self) -> BaseField:
        return self.base

    @property
    def value_group_gen(self) -> Exponent:
        return EXP_ZERO

    @property
    def zero(self):
        return self.base.zero

    @property
    def one(self):
        return self.base.one

    def from_int(self, n: int):
        return self.base.from_int(n)

    def add(self, x, y):
        return self.base.add(x, y)

    def sub(self, x, y):
        return self.base.sub(x, y)

    def mul(self, x, y):
        return self.base.mul(x, y)

    def neg(self, x):
        return self.base.neg(x)

    def inv(self, x):
        return self.base.inv(x)

    def div(self, x, y):
        return self.base.div(x, y)

    def is_zero(self, x) -> bool:
        return self.base.is_zero(x)

    def valuation(self, x) -> Magnitude:
        if self.base.is_zero(x):
            return Magnitude.zero()
        return Magnitude.unit()

    def residue(self, x):
        return x

    def residue_of_quotient(self, x, m):
        if self.base.is_zero(m):
            raise DomainError("division by zero")
        return self.base.div(x, m)

    def element_with_valuation(self, e: Exponent):
        if e.sign() == 0 and e.is_rational():
            return self.base.one
        return None

    def format_element(self, x) -> str:
        return self.base.format(x)

    def parse_element(self, text: str):
        s = text.strip().replace(" ", "")
        try:
            return self.base.parse(s)
        except ParseError:
            raise ParseError("trivially valued element", text) from None


ValuedField = Union[PAdicField, PuiseuxField, TrivialField]


def parse_field(selector: str) -> ValuedField:
    """Resolve a field selector: padic:<p>, puiseux:<B>, trivial:<B>."""
    s = selector.strip()
    m = re.match(r"^(padic|puiseux|trivial):(.+)$", s)
    if not m:
        raise ParseError("field selector", selector)
    kind, arg = m.group(1), m.group(2)
    if kind == "padic":
        if not re.match(r"^\d+$", arg):
            raise ParseError("field selector", selector, "prime expected")
        try:
            return PAdicField(int(arg))
        except DomainError as exc:
            raise ParseError("field selector", selector, str(exc)) from None
    base = parse_base_field(arg)
    return PuiseuxField(base) if kind == "puiseux" else TrivialField(base)


def ultrametric_check(field: ValuedField, x, y) -> bool:
    """Strong triangle inequality, with forced equality off the diagonal."""
    vx, vy = field.valuation(x), field.valuation(y)
    vsum = field.valuation(field.add(x, y))
    bound = vx if vx >= vy else vy
    if vsum > bound:
        return False
    if vx != vy and vsum != bound:
        return False
    return True
