"""Affinoid subsets of the line cut out by finitely many inequalities.

A domain is a conjunction of conditions ``|f(x)| <= r * |g(x)|`` (or
``>=``); membership is decided exactly through seminorm evaluation.
Three familiar shapes get first-class treatment (closed discs, closed
annuli, discs with open holes removed) because their Shilov boundaries
are finite explicit sets of disc points; arbitrary inequality lists
support membership only.

The classification tag is syntactic on purpose: it reports how the
domain is presented, not the finest class its underlying set lies in.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Optional, Tuple, Union

from .errors import DomainError, ParseError
from .exponents import Magnitude, format_magnitude, parse_exponent
from .fields import ValuedField
from .line import (
    ChainPoint,
    DiscPoint,
    Point,
    Type1Point,
    eval_seminorm,
    point_eq,
    seminorm_is_exact,
)
from .polynomials import Poly, format_poly, parse_poly


class Rel(Enum):
    LEQ = "<="
    GEQ = ">="


def _is_one(p: Poly) -> bool:
    k = p.field
    return p.degree == 0 and k.is_zero(k.sub(p.coefficient(0), k.one))


@dataclass(frozen=True)
class Inequality:
    """``|f(x)| rel bound * |g(x)|``; strict variants exist only for
    internal use by open discs and are not part of the text grammar."""

    f: Poly
    g: Poly
    bound: Magnitude
    rel: Rel
    strict: bool = False

    def __post_init__(self):
        if self.bound.is_zero:
            raise DomainError("inequality bounds must be positive magnitudes")
        if self.f.field != self.g.field:
            raise DomainError("inequality sides live over different fields")

    def holds_at(self, x: Point) -> bool:
        lhs = eval_seminorm(self.f, x)
        rhs = self.bound * eval_seminorm(self.g, x)
        if self.rel is Rel.LEQ:
            return lhs < rhs if self.strict else lhs <= rhs
        return lhs > rhs if self.strict else lhs >= rhs


class DomainClass(Enum):
    EVERYTHING = "everything"
    WEIERSTRASS = "weierstrass"
    LAURENT = "laurent"
    RATIONAL = "rational"
    GENERAL = "general"


@dataclass(frozen=True)
class Domain:
    """Conjunction of inequalities; the empty conjunction is the whole
    line.  The no-common-zero hypothesis behind the rational class is
    recorded by the tag, not verified; a violation just yields a domain
    with fewer points than the name suggests."""

    inequalities: Tuple[Inequality, ...] = dc_field(default_factory=tuple)

    def __post_init__(self):
        fields = {iq.f.field for iq in self.inequalities}
        if len(fields) > 1:
            raise DomainError("all inequalities must share one coefficient field")

    @staticmethod
    def everything() -> "Domain":
        return Domain(())

    @property
    def is_everything(self) -> bool:
        return not self.inequalities

    def classify(self) -> DomainClass:
        if self.is_everything:
            return DomainClass.EVERYTHING
        all_leq = all(iq.rel is Rel.LEQ for iq in self.inequalities)
        if all_leq and all(_is_one(iq.g) for iq in self.inequalities):
            return DomainClass.WEIERSTRASS
        if all(_is_one(iq.g) or _is_one(iq.f) for iq in self.inequalities):
            return DomainClass.LAURENT
        shared = {iq.g.coeffs for iq in self.inequalities}
        if all_leq and len(shared) == 1:
            return DomainClass.RATIONAL
        return DomainClass.GENERAL


def member(x: Point, d: Domain) -> bool:
    """Exact for honest points; for chains the verdict uses the
    innermost listed disc and may differ from the limit point's."""
    return all(iq.holds_at(x) for iq in d.inequalities)


def membership_is_exact(x: Point) -> bool:
    return seminorm_is_exact(x)


def domain_intersect(d1: Domain, d2: Domain) -> Domain:
    return Domain(d1.inequalities + d2.inequalities)


# ---------------------------------------------------------------------
# Standard shapes with explicit Shilov boundaries


@dataclass(frozen=True)
class ClosedDisc:
    field: ValuedField
    center: object
    radius: Magnitude

    def __post_init__(self):
        if self.radius.is_zero:
            raise DomainError("disc radius must be positive")


@dataclass(frozen=True)
class Annulus:
    """Closed annulus: inner radius ``s`` up to outer radius ``r``."""

    field: ValuedField
    center: object
    inner: Magnitude
    outer: Magnitude

    def __post_init__(self):
        if self.inner.is_zero or self.outer.is_zero:
            raise DomainError("annulus radii must be positive")
        if not self.inner <= self.outer:
            raise DomainError("annulus needs inner radius <= outer radius")


@dataclass(frozen=True)
class DiscMinusHoles:
    """Closed disc with pairwise disjoint open subdiscs removed.  The
    removed discs being open is what keeps their maximal points inside;
    they are exactly the extra Shilov points."""

    field: ValuedField
    center: object
    radius: Magnitude
    holes: Tuple[Tuple[object, Magnitude], ...]

    def __post_init__(self):
        if self.radius.is_zero:
            raise DomainError("disc radius must be positive")
        k = self.field
        for a, r in self.holes:
            if r.is_zero:
                raise DomainError("hole radii must be positive")
            if not r <= self.radius or not k.valuation(k.sub(a, self.center)) <= self.radius:
                raise DomainError("holes must sit inside the disc")
        for i in range(len(self.holes)):
            for j in range(i + 1, len(self.holes)):
                ai, ri = self.holes[i]
                aj, rj = self.holes[j]
                bigger = ri if rj <= ri else rj
                if k.valuation(k.sub(ai, aj)) < bigger:
                    raise DomainError("holes must be pairwise disjoint")


StandardDomain = Union[ClosedDisc, Annulus, DiscMinusHoles]


def _t_minus(field: ValuedField, a) -> Poly:
    return Poly.make(field, (field.neg(a), field.one))


def to_domain(sd: StandardDomain) -> Domain:
    k = sd.field
    one = Poly.constant(k, k.one)
    shifted = _t_minus(k, sd.center)
    if isinstance(sd, ClosedDisc):
        return Domain((Inequality(shifted, one, sd.radius, Rel.LEQ),))
    if isinstance(sd, Annulus):
        return Domain(
            (
                Inequality(shifted, one, sd.outer, Rel.LEQ),
                Inequality(shifted, one, sd.inner, Rel.GEQ),
            )
        )
    ineqs = [Inequality(shifted, one, sd.radius, Rel.LEQ)]
    for a, r in sd.holes:
        ineqs.append(Inequality(_t_minus(k, a), one, r, Rel.GEQ))
    return Domain(tuple(ineqs))


def shilov_boundary(sd: StandardDomain) -> Tuple[Point, ...]:
    """The finite set where every |f| attains its maximum: outer disc
    point always; the inner one too for a genuinely thick annulus; one
    extra point per removed hole."""
    k = sd.field
    if isinstance(sd, ClosedDisc):
        return (DiscPoint(k, sd.center, sd.radius),)
    if isinstance(sd, Annulus):
        outer = DiscPoint(k, sd.center, sd.outer)
        if sd.inner == sd.outer:
            return (outer,)
        return (outer, DiscPoint(k, sd.center, sd.inner))
    pts = [DiscPoint(k, sd.center, sd.radius)]
    for a, r in sd.holes:
        pts.append(DiscPoint(k, a, r))
    return tuple(pts)


def max_modulus_check(f: Poly, sd: StandardDomain, samples) -> bool:
    """True when the largest Shilov value dominates |f| at every sample.
    Samples must belong to the domain; the maximum over the whole domain
    is attained on the Shilov set, so this is a genuine upper bound and
    the bound is tight."""
    d = to_domain(sd)
    for x in samples:
        if not member(x, d):
            raise DomainError("sample point lies outside the domain")
    best = max(eval_seminorm(f, b) for b in shilov_boundary(sd))
    return all(eval_seminorm(f, x) <= best for x in samples)


def boundary_points(sd: StandardDomain) -> Tuple[Point, ...]:
    return shilov_boundary(sd)


def in_interior(x: Point, sd: StandardDomain) -> bool:
    if not member(x, to_domain(sd)):
        return False
    return not any(point_eq(x, b) for b in shilov_boundary(sd))


# ---------------------------------------------------------------------
# Reduction to the residue line


class _Generic:
    __slots__ = ()

    def __repr__(self):
        return "GENERIC"


GENERIC = _Generic()


def reduce_point(x: Point):
    """Image of a unit-disc point on the residue line.

    The Gauss point of the unit disc maps to the generic point; every
    other point sits inside a unique residue class and maps to that
    residue.  Chains reduce through their innermost listed disc, which
    is exact as soon as that disc has radius below one.
    """
    k = x.field
    if isinstance(x, Type1Point):
        center, radius = x.center, Magnitude.zero()
    elif isinstance(x, DiscPoint):
        center, radius = x.center, x.radius
    else:
        center, radius = x.discs[-1]
    unit = Magnitude.unit()
    if not radius <= unit or not k.valuation(center) <= unit:
        raise DomainError("reduction is defined on the unit disc only")
    if radius == unit:
        if isinstance(x, ChainPoint):
            raise DomainError("chain too coarse to reduce: refine below radius one")
        return GENERIC
    return k.residue(center)


# ---------------------------------------------------------------------
# Text forms


_MAG_RE = re.compile(r"^rho\^\((?P<e>[^)]*)\)$")


def parse_magnitude_text(text: str) -> Magnitude:
    s = "".join(text.split())
    m = _MAG_RE.match(s)
    if not m:
        raise ParseError("magnitude", text, "expected rho^(<exponent>)")
    return Magnitude.finite(parse_exponent(m.group("e")))


def format_inequality(iq: Inequality) -> str:
    return (
        f"|{format_poly(iq.f)}| {iq.rel.value} "
        f"{format_magnitude(iq.bound)} * |{format_poly(iq.g)}|"
    )


def format_domain(d: Domain) -> str:
    if d.is_everything:
        return "everything"
    return " && ".join(format_inequality(iq) for iq in d.inequalities)


_INEQ_RE = re.compile(
    r"^\|(?P<f>[^|]+)\|(?P<rel><=|>=)(?P<mag>rho\^\([^)]*\))\*\|(?P<g>[^|]+)\|$"
)


def parse_domain(field: ValuedField, text: str) -> Domain:
    s = "".join(text.split())
    if s == "everything":
        return Domain.everything()
    ineqs = []
    for part in s.split("&&"):
        m = _INEQ_RE.match(part)
        if not m:
            raise ParseError(
                "domain", text, f"bad inequality {part!r}; "
                "expected |<poly>| <= rho^(<exp>) * |<poly>|"
            )
        rel = Rel.LEQ if m.group("rel") == "<=" else Rel.GEQ
        ineqs.append(
            Inequality(
                parse_poly(field, m.group("f")),
                parse_poly(field, m.group("g")),
                parse_magnitude_text(m.group("mag")),
                rel,
            )
        )
    if not ineqs:
        raise ParseError("domain", text, "no inequalities found")
    return Domain(tuple(ineqs))


def format_standard_domain(sd: StandardDomain) -> str:
    k = sd.field

    def e(mag: Magnitude) -> str:
        from .exponents import format_exponent

        return format_exponent(mag.exponent)

    if isinstance(sd, ClosedDisc):
        return f"closed_disc({k.format_element(sd.center)}; {e(sd.radius)})"
    if isinstance(sd, Annulus):
        return (
            f"annulus({k.format_element(sd.center)}; "
            f"{e(sd.inner)}, {e(sd.outer)})"
        )
    holes = ", ".join(
        f"({k.format_element(a)}; {e(r)})" for a, r in sd.holes
    )
    return f"disc_holes({k.format_element(sd.center)}; {e(sd.radius)}; {holes})"


def _split_top(body: str, sep: str, rule: str, original: str):
    parts = []
    cur = ""
    depth = 0
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    if depth != 0:
        raise ParseError(rule, original, "unbalanced parentheses")
    return parts


def parse_standard_domain(field: ValuedField, text: str) -> StandardDomain:
    s = "".join(text.split())
    for name in ("closed_disc", "annulus", "disc_holes"):
        if s.startswith(name + "(") and s.endswith(")"):
            body = s[len(name) + 1 : -1]
            parts = _split_top(body, ";", "standard-domain", text)
            try:
                if name == "closed_disc":
                    if len(parts) != 2:
                        raise ParseError("standard-domain", text, "expected (a; e)")
                    return ClosedDisc(
                        field,
                        field.parse_element(parts[0]),
                        Magnitude.finite(parse_exponent(parts[1])),
                    )
                if name == "annulus":
                    if len(parts) != 2:
                        raise ParseError(
                            "standard-domain", text, "expected (a; e_inner, e_outer)"
                        )
                    exps = _split_top(parts[1], ",", "standard-domain", text)
                    if len(exps) != 2:
                        raise ParseError(
                            "standard-domain", text, "expected two radius exponents"
                        )
                    return Annulus(
                        field,
                        field.parse_element(parts[0]),
                        Magnitude.finite(parse_exponent(exps[0])),
                        Magnitude.finite(parse_exponent(exps[1])),
                    )
                if len(parts) != 3:
                    raise ParseError(
                        "standard-domain", text, "expected (a; e; (a1; e1), ...)"
                    )
                holes = []
                for item in _split_top(parts[2], ",", "standard-domain", text):
                    if not (item.startswith("(") and item.endswith(")")) or ";" not in item:
                        raise ParseError(
                            "standard-domain", text, f"bad hole {item!r}"
                        )
                    ac, ec = item[1:-1].split(";", 1)
                    holes.append(
                        (field.parse_element(ac), Magnitude.finite(parse_exponent(ec)))
                    )
                return DiscMinusHoles(
                    field,
                    field.parse_element(parts[0]),
                    Magnitude.finite(parse_exponent(parts[1])),
                    tuple(holes),
                )
            except DomainError as exc:
                raise ParseError("standard-domain", text, str(exc)) from None
    raise ParseError("standard-domain", text)
