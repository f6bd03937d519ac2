"""Dense univariate polynomials over the exact valued fields.

Coefficients are stored low degree first with trailing zeros trimmed,
so structural equality of :class:`Poly` values is equality of
polynomials.  Everything here is exact; the Newton-polygon routines
return magnitude multisets in the same log scale the rest of the
library uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
import re

from .errors import DomainError, ParseError
from .exponents import Exponent, Magnitude
from .fields import ValuedField, _split_terms


@dataclass(frozen=True)
class Poly:
    """A polynomial in T over a fixed valued field."""

    field: ValuedField
    coeffs: tuple

    @staticmethod
    def make(field: ValuedField, coeffs) -> "Poly":
        cs = list(coeffs)
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        return Poly(field, tuple(cs))

    @staticmethod
    def constant(field: ValuedField, c) -> "Poly":
        return Poly.make(field, [c])

    @staticmethod
    def variable(field: ValuedField) -> "Poly":
        return Poly.make(field, [field.zero, field.one])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def leading_coefficient(self):
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- ring operations ------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        k = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.make(
            k, [k.add(self.coefficient(i), other.coefficient(i)) for i in range(n)]
        )

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        k = self.field
        return Poly(k, tuple(k.neg(c) for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        k = self.field
        if self.is_zero or other.is_zero:
            return Poly(k, ())
        out = [k.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if k.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = k.add(out[i + j], k.mul(a, b))
        return Poly.make(k, out)

    def scale(self, c) -> "Poly":
        k = self.field
        return Poly.make(k, [k.mul(c, a) for a in self.coeffs])

    def evaluate(self, a):
        k = self.field
        acc = k.zero
        for c in reversed(self.coeffs):
            acc = k.add(k.mul(acc, a), c)
        return acc

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.leading_coefficient()))

    def __str__(self) -> str:
        return format_poly(self)


def taylor_shift(f: Poly, a) -> Poly:
    """Expand ``f`` around ``a``: the polynomial ``g`` with g(T) = f(T + a).

    Classic synthetic-division sweep: ``a`` is folded in one row at a
    time, so the cost is quadratic in the degree with no binomials.
    """
    k = f.field
    cs = list(f.coeffs)
    n = len(cs)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            cs[j] = k.add(cs[j], k.mul(a, cs[j + 1]))
    return Poly.make(k, cs)


def derivative(f: Poly) -> Poly:
    k = f.field
    return Poly.make(
        k, [k.mul(k.from_int(i), f.coeffs[i]) for i in range(1, len(f.coeffs))]
    )


def hasse_derivative(f: Poly, i: int) -> Poly:
    """The i-th Hasse derivative: sum of C(n, i) c_n T^(n-i).

    Dividing the iterated derivative by i! is folded into the binomial,
    so the operation stays meaningful in positive characteristic, where
    the plain derivative can vanish without the polynomial being
    constant.
    """
    if i < 0:
        raise DomainError("Hasse derivative index must be non-negative")
    k = f.field
    out = [
        k.mul(k.from_int(comb(n, i)), f.coeffs[n])
        for n in range(i, len(f.coeffs))
    ]
    return Poly.make(k, out)


# ---------------------------------------------------------------------
# Newton polygon


def _rational_exponent(field: ValuedField, c) -> Fraction:
    mag = field.valuation(c)
    e = mag.exponent
    if not e.is_rational():
        raise DomainError("field magnitudes must have rational exponents")
    return e.a


def newton_slopes(f: Poly) -> tuple:
    """Multiset of root magnitudes, smallest first, from the lower hull.

    Zero roots are read off the T-adic valuation and reported as zero
    magnitudes; each finite hull segment of slope s and horizontal
    length L contributes L roots of magnitude ``rho**(-s)``.
    """
    if f.is_zero:
        raise DomainError("the zero polynomial has no root data")
    k = f.field
    v0 = 0
    while k.is_zero(f.coeffs[v0]):
        v0 += 1
    mags = [Magnitude.zero()] * v0
    pts = [
        (i - v0, _rational_exponent(k, f.coeffs[i]))
        for i in range(v0, len(f.coeffs))
        if not k.is_zero(f.coeffs[i])
    ]
    hull = _lower_hull(pts)
    for (i1, e1), (i2, e2) in zip(hull, hull[1:]):
        slope = Fraction(e2 - e1, i2 - i1)
        mags.extend([Magnitude.finite(Exponent(-slope))] * (i2 - i1))
    return tuple(sorted(mags, key=_mag_sort_key))


def _mag_sort_key(m: Magnitude):
    if m.is_zero:
        return (0, Fraction(0), Fraction(0))
    return (1, -m.exponent.a, -m.exponent.b)


def _lower_hull(pts):
    """Lower convex hull by a monotone sweep; input is sorted by x."""
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def count_roots_in_disc(f: Poly, a, r: Magnitude) -> int:
    """Number of roots (with multiplicity) with ``|root - a| <= r``."""
    if f.is_zero:
        raise DomainError("the zero polynomial has no root data")
    shifted = taylor_shift(f, a)
    return sum(1 for m in newton_slopes(shifted) if m <= r)


# ---------------------------------------------------------------------
# Division, gcd, squarefree structure.  These need coefficient
# inverses, so they are meant for residue and base fields (where every
# nonzero element is invertible); over Puiseux coefficients they work
# exactly when the divisions encountered stay monomial.


def poly_divmod(f: Poly, g: Poly):
    if g.is_zero:
        raise DomainError("polynomial division by zero")
    k = f.field
    lead_inv = k.inv(g.leading_coefficient())
    rem = list(f.coeffs)
    dq = len(f.coeffs) - len(g.coeffs)
    if dq < 0:
        return Poly(k, ()), f
    quo = [k.zero] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + g.degree]
        if k.is_zero(c):
            continue
        q = k.mul(c, lead_inv)
        quo[i] = q
        for j, b in enumerate(g.coeffs):
            rem[i + j] = k.sub(rem[i + j], k.mul(q, b))
    return Poly.make(k, quo), Poly.make(k, rem)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    while not g.is_zero:
        f, g = g, poly_divmod(f, g)[1]
    if f.is_zero:
        return f
    return f.monic()


def _exact_div(f: Poly, g: Poly) -> Poly:
    q, r = poly_divmod(f, g)
    if not r.is_zero:
        raise DomainError("division was expected to be exact")
    return q


def _deflate(f: Poly, p: int) -> Poly:
    k = f.field
    if any(
        i % p != 0 and not k.is_zero(c) for i, c in enumerate(f.coeffs)
    ):
        raise DomainError("polynomial is not a p-th power in T")
    return Poly.make(k, [f.coeffs[i] for i in range(0, len(f.coeffs), p)])


def squarefree_decomposition(f: Poly):
    """Pairs ``(g, e)`` with the ``g`` monic, squarefree, pairwise coprime
    and ``f = lc(f) * prod g**e``.

    The characteristic-p wrinkle (vanishing derivatives) is handled by
    deflating T^p and scaling multiplicities, which is valid over the
    prime and rational residue fields used here because both are
    perfect.
    """
    if f.degree < 1:
        return []
    d = derivative(f)
    if d.is_zero:
        p = f.field.char
        if p == 0:
            raise DomainError("constant derivative in characteristic zero")
        return [(g, p * e) for g, e in squarefree_decomposition(_deflate(f, p))]
    parts = []
    g0 = poly_gcd(f, d)
    w = _exact_div(f.monic(), g0)
    i = 1
    while w.degree >= 1:
        y = poly_gcd(w, g0)
        z = _exact_div(w, y)
        if z.degree >= 1:
            parts.append((z.monic(), i))
        w = y
        g0 = _exact_div(g0, y)
        i += 1
    if g0.degree >= 1:
        parts.extend(squarefree_decomposition(g0))
    return sorted(parts, key=lambda pair: (pair[1], pair[0].degree))


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``f``."""
    if f.degree < 0:
        raise DomainError("the zero polynomial has no squarefree part")
    out = Poly.constant(f.field, f.field.one)
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out.monic() if out.degree >= 1 else out


def is_constant_times_square(f: Poly) -> bool:
    """Is ``f`` a nonzero constant times a square (multiplicities all even)?"""
    if f.is_zero:
        raise DomainError("zero polynomial")
    return all(e % 2 == 0 for _, e in squarefree_decomposition(f))


# ---------------------------------------------------------------------
# Text form: "c_k*T^k + ... + c_0" with compound coefficients in
# parentheses.  The variable of the polynomial level is always the
# capital T; a lowercase t inside a coefficient belongs to the Puiseux
# backend.

_TERM_RE = re.compile(r"^(?:(?P<coef>.+)\*)?(?P<neg>-)?T(?:\^(?P<k>\d+))?$")


def _needs_parens(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and (ch == "+" or (ch == "-" and i > 0)):
            return True
    return False


# Residue and base fields expose format/parse, valued fields
# format_element/parse_element; polynomials live over both.
def _format_coeff(k, c) -> str:
    if hasattr(k, "format_element"):
        return k.format_element(c)
    return k.format(c)


def _parse_coeff(k, text: str):
    if hasattr(k, "parse_element"):
        return k.parse_element(text)
    return k.parse(text)


def format_poly(f: Poly) -> str:
    if f.is_zero:
        return "0"
    k = f.field
    parts = []
    one = _format_coeff(k, k.one)
    for i in range(f.degree, -1, -1):
        c = f.coefficient(i)
        if k.is_zero(c):
            continue
        ctext = _format_coeff(k, c)
        if _needs_parens(ctext):
            ctext = f"({ctext})"
        if i == 0:
            parts.append(ctext)
        else:
            tpow = "T" if i == 1 else f"T^{i}"
            parts.append(tpow if ctext == one else f"{ctext}*{tpow}")
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-") and not part.startswith("(-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


def parse_poly(field: ValuedField, text: str) -> Poly:
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("polynomial", text, "empty")
    coeffs: dict = {}
    for term in _split_terms(s, "polynomial", text):
        k, c = _parse_poly_term(field, term, text)
        coeffs[k] = field.add(coeffs.get(k, field.zero), c)
    degree = max(coeffs) if coeffs else 0
    return Poly.make(field, [coeffs.get(i, field.zero) for i in range(degree + 1)])


def _strip_parens(s: str) -> str:
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(s) - 1:
                    return s
        s = s[1:-1]
    return s


def _parse_poly_term(field: ValuedField, term: str, original: str):
    neg = False
    if term.startswith("-"):
        neg, term = True, term[1:]
    m = _TERM_RE.match(term)
    if m:
        k = int(m.group("k")) if m.group("k") else 1
        if m.group("neg"):
            neg = not neg
        coef_text = m.group("coef")
        c = field.one if coef_text is None else _parse_coeff(field, _strip_parens(coef_text))
    else:
        k = 0
        c = _parse_coeff(field, _strip_parens(term))
    if neg:
        c = field.neg(c)
    return k, c
