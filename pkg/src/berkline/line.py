"""Points of the non-archimedean affine line and their tree geometry.

A point is a multiplicative seminorm on the polynomial ring, and every
seminorm handled here is presented through discs:

* ``Type1Point(a)``: evaluation at a field element, the disc of radius
  zero around ``a``.
* ``DiscPoint(a, r)``: the sup norm over the closed disc ``E(a, r)``
  with ``r = rho**e > 0``.  Whether ``e`` is commensurable with the
  field's value group separates the two flavours (types 2 and 3).
* ``ChainPoint(discs)``: a strictly shrinking nested family standing in
  for a limit point (type 4).  Listing finitely many discs makes most
  answers upper bounds; operations that cannot be exact say so.

Containment of discs is the tree order.  Any two discs are either
nested or disjoint, which is why joins exist and paths are unique; all
of the geometry below is elementary interval bookkeeping on exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from .errors import DomainError, ParseError
from .exponents import (
    INF,
    Exponent,
    Length,
    Magnitude,
    add_lengths,
    format_exponent,
    format_length,
    is_rational_over_value_group,
    mag_max,
    parse_exponent,
)
from .fields import ValuedField
from .polynomials import Poly, hasse_derivative, taylor_shift


# ---------------------------------------------------------------------
# Point representations


@dataclass(frozen=True, eq=False)
class Type1Point:
    """Evaluation at a field element."""

    field: ValuedField
    center: object

    def __str__(self):
        return format_point(self)


@dataclass(frozen=True, eq=False)
class DiscPoint:
    """The maximal point of the closed disc ``E(center, radius)``."""

    field: ValuedField
    center: object
    radius: Magnitude

    def __post_init__(self):
        if self.radius.is_zero:
            raise DomainError("disc points need a positive radius; use Type1Point")

    def __str__(self):
        return format_point(self)


@dataclass(frozen=True, eq=False)
class ChainPoint:
    """A strictly nested chain of discs, outermost first.

    ``limit_exponent`` records the infimum of the radii when the caller
    knows it; otherwise radius queries return the innermost listed disc
    and are flagged as upper bounds.
    """

    field: ValuedField
    discs: Tuple[Tuple[object, Magnitude], ...]
    limit_exponent: Optional[Exponent] = None

    def __post_init__(self):
        if not self.discs:
            raise DomainError("a chain needs at least one disc")
        k = self.field
        prev = None
        for center, radius in self.discs:
            if radius.is_zero:
                raise DomainError("chain radii must be positive")
            if prev is not None:
                pc, pr = prev
                if not radius < pr:
                    raise DomainError("chain radii must strictly decrease")
                if k.valuation(k.sub(center, pc)) > pr:
                    raise DomainError("chain discs must be nested")
            prev = (center, radius)
        if self.limit_exponent is not None:
            for _, radius in self.discs:
                if not self.limit_exponent > radius.exponent:
                    raise DomainError("limit radius must sit below every listed disc")

    def __str__(self):
        return format_point(self)


Point = Union[Type1Point, DiscPoint, ChainPoint]


def _anchor(x: Point):
    """(center, radius) of the disc that stands in for ``x`` in tree ops.

    Chains are represented by their outermost listed disc, which is
    exact whenever the other point leaves that disc and an upper
    approximation otherwise.
    """
    if isinstance(x, Type1Point):
        return x.center, Magnitude.zero()
    if isinstance(x, DiscPoint):
        return x.center, x.radius
    return x.discs[0]


def _same_field(x: Point, y) -> ValuedField:
    if x.field != y.field:
        raise DomainError("points belong to different coefficient fields")
    return x.field


# ---------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class PointClass:
    """Type plus the two invariants of the completed residue field.

    ``F`` counts the residue transcendence degree and ``E`` the rational
    rank added to the value group; each point type realizes at most one
    of them.
    """

    type: int
    E: int
    F: int


class Components(Enum):
    """What removing the point does to the space around it."""

    ONE = "one"
    TWO = "two"
    P1_OF_RESIDUE = "p1-of-residue-field"


def classify(x: Point) -> PointClass:
    if isinstance(x, Type1Point):
        return PointClass(1, 0, 0)
    if isinstance(x, ChainPoint):
        return PointClass(4, 0, 0)
    if is_rational_over_value_group(x.radius, x.field.value_group_gen):
        return PointClass(2, 0, 1)
    return PointClass(3, 1, 0)


def components_count(x: Point) -> Components:
    t = classify(x).type
    if t in (1, 4):
        return Components.ONE
    if t == 3:
        return Components.TWO
    return Components.P1_OF_RESIDUE


@dataclass(frozen=True)
class RadiusInfo:
    value: Magnitude
    exact: bool


def point_radius(x: Point) -> RadiusInfo:
    if isinstance(x, Type1Point):
        return RadiusInfo(Magnitude.zero(), True)
    if isinstance(x, DiscPoint):
        return RadiusInfo(x.radius, True)
    if x.limit_exponent is not None:
        return RadiusInfo(Magnitude.finite(x.limit_exponent), True)
    return RadiusInfo(x.discs[-1][1], False)


def seminorm_is_exact(x: Point) -> bool:
    return not isinstance(x, ChainPoint)


# ---------------------------------------------------------------------
# Seminorm evaluation


def _disc_eval(f: Poly, center, radius: Magnitude) -> Magnitude:
    """Sup norm of ``f`` over ``E(center, radius)``: shift, then take
    the largest ``|f_i| * r**i``; in log scale that is the smallest
    ``e_i + i*e_r`` over the nonzero coefficients."""
    k = f.field
    g = taylor_shift(f, center) if not k.is_zero(center) else f
    best: Optional[Exponent] = None
    e_r = radius.exponent
    for i, c in enumerate(g.coeffs):
        if k.is_zero(c):
            continue
        e = k.valuation(c).exponent + e_r.scale(i)
        if best is None or e < best:
            best = e
    return Magnitude.zero() if best is None else Magnitude.finite(best)


def eval_seminorm(f: Poly, x: Point) -> Magnitude:
    """Apply the seminorm of ``x`` to ``f``.

    For a chain the value reported is the one at the innermost listed
    disc; the true limit value can only be smaller, so callers treating
    chains should consult :func:`seminorm_is_exact`.
    """
    if f.field != x.field:
        raise DomainError("polynomial and point fields differ")
    if isinstance(x, Type1Point):
        return x.field.valuation(f.evaluate(x.center))
    if isinstance(x, DiscPoint):
        return _disc_eval(f, x.center, x.radius)
    center, radius = x.discs[-1]
    return _disc_eval(f, center, radius)


def torus_retract(f: Poly, x: Point, t: Magnitude) -> Magnitude:
    """Sup of ``|f|`` over the closed disc of radius ``t`` around ``x``.

    Computed without moving the point: the value is the largest
    ``|D_i f(x)| * t**i`` over the Hasse derivatives, which reduces a
    two-dimensional sup to finitely many seminorm evaluations.
    """
    if t.is_zero:
        raise DomainError("retraction radius must be positive")
    if isinstance(x, ChainPoint):
        raise DomainError("retraction is not defined for chain points")
    if f.is_zero:
        return Magnitude.zero()
    best = Magnitude.zero()
    tpow = Magnitude.unit()
    for i in range(f.degree + 1):
        term = eval_seminorm(hasse_derivative(f, i), x) * tpow
        if term > best:
            best = term
        tpow = tpow * t
    return best


# ---------------------------------------------------------------------
# Tree order, joins, paths


def point_leq(x: Point, y: Point) -> bool:
    """Disc containment: does the disc of ``y`` contain the disc of ``x``?

    Comparisons that involve a chain use its outermost listed disc and
    are therefore approximate.
    """
    k = _same_field(x, y)
    ax, rx = _anchor(x)
    ay, ry = _anchor(y)
    if not rx <= ry:
        return False
    return k.valuation(k.sub(ax, ay)) <= ry


def point_eq(x: Point, y: Point) -> bool:
    k = _same_field(x, y)
    ax, rx = _anchor(x)
    ay, ry = _anchor(y)
    if rx != ry:
        return False
    return k.valuation(k.sub(ax, ay)) <= rx


def join(x: Point, y: Point) -> Point:
    """Smallest disc point above both arguments.

    Returns one of the inputs unchanged when it already dominates the
    other.  With chains involved the join is computed from outermost
    listed discs (an upper approximation of the true join).
    """
    k = _same_field(x, y)
    ax, rx = _anchor(x)
    ay, ry = _anchor(y)
    d = k.valuation(k.sub(ax, ay))
    r = mag_max(rx, ry, d)
    if r == rx and d <= rx:
        return x
    if r == ry and d <= ry:
        return y
    return DiscPoint(k, ax, r)


@dataclass(frozen=True)
class PathSegment:
    """Disc points sharing one center, traversed between two exponents.

    ``e_from``/``e_to`` are radius exponents (``INF`` marks a radius-zero
    leaf end); the segment walks monotonically between them.
    """

    center: object
    e_from: Length
    e_to: Length

    @property
    def length(self) -> Length:
        if self.e_from is INF or self.e_to is INF:
            return INF
        d = self.e_from - self.e_to
        return -d if d.sign() < 0 else d


@dataclass(frozen=True)
class Path:
    segments: Tuple[PathSegment, ...]
    start: Point
    end: Point
    length: Length


def _radius_exponent_or_inf(r: Magnitude) -> Length:
    return INF if r.is_zero else r.exponent


def path(x: Point, y: Point) -> Path:
    """The unique arc from ``x`` to ``y``: up to the join, then down."""
    if isinstance(x, ChainPoint) or isinstance(y, ChainPoint):
        raise DomainError("paths with chain endpoints are not supported")
    _same_field(x, y)
    z = join(x, y)
    ax, rx = _anchor(x)
    ay, ry = _anchor(y)
    _, rz = _anchor(z)
    ex = _radius_exponent_or_inf(rx)
    ey = _radius_exponent_or_inf(ry)
    ez = rz.exponent if not rz.is_zero else INF
    segments = []
    if not point_eq(x, z):
        segments.append(PathSegment(ax, ex, ez))
    if not point_eq(y, z):
        segments.append(PathSegment(ay, ez, ey))
    total = add_lengths(*[s.length for s in segments]) if segments else Exponent(0)
    return Path(tuple(segments), x, y, total)


class _InfinityDirection:
    __slots__ = ()

    def __repr__(self):
        return "DIR_INF"


INFINITY_DIR = _InfinityDirection()


def direction(x: Point, y: Point):
    """Which branch at the disc point ``x`` the point ``y`` falls into.

    Branches at a type-2 point are parametrized by the residue line plus
    a point at infinity: residues label the open subdiscs, infinity
    labels everything outside the closed disc.  Needs a field element of
    magnitude equal to the radius, so over a p-adic backend the radius
    exponent must be an integer.
    """
    if not isinstance(x, DiscPoint):
        raise DomainError("directions are defined at disc points")
    if classify(x).type != 2:
        raise DomainError("directions need a type-2 base point")
    k = _same_field(x, y)
    if point_eq(x, y):
        raise DomainError("no direction from a point to itself")
    c = k.element_with_valuation(x.radius.exponent)
    if c is None:
        raise DomainError("no field element realizes this radius; direction undefined")
    if not point_leq(y, x):
        return INFINITY_DIR
    ay, _ = _anchor(y)
    delta = k.sub(ay, x.center)
    return k.residue_of_quotient(delta, c)


# ---------------------------------------------------------------------
# Skeleton graphs, convex hulls, retractions


@dataclass(frozen=True)
class SkeletonVertex:
    """``point is None`` marks the projective infinity attached by
    double-cover constructions; everything else is an honest point."""

    id: int
    point: Optional[Point]
    ptype: int
    genus: int = 0

    @property
    def label(self) -> str:
        return "inf" if self.point is None else format_point(self.point)


@dataclass(frozen=True)
class SkeletonEdge:
    """``u`` is the lower endpoint (smaller disc), ``v`` the upper."""

    u: int
    v: int
    length: Length


@dataclass(frozen=True)
class SkeletonGraph:
    vertices: Tuple[SkeletonVertex, ...]
    edges: Tuple[SkeletonEdge, ...]
    marked: frozenset

    def vertex(self, vid: int) -> SkeletonVertex:
        return self.vertices[vid]

    def degree(self, vid: int) -> int:
        return sum(1 for e in self.edges if vid in (e.u, e.v))

    def canonical_key(self):
        labels = {
            v.id: (v.label, v.ptype, v.genus, v.id in self.marked)
            for v in self.vertices
        }
        edge_keys = sorted(
            (min(labels[e.u], labels[e.v]), max(labels[e.u], labels[e.v]),
             format_length(e.length))
            for e in self.edges
        )
        return (tuple(sorted(labels.values())), tuple(edge_keys))

    def to_dot(self, name: str = "skeleton") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            mark = " *" if v.id in self.marked else ""
            lines.append(
                f'  n{v.id} [label="{v.label} t{v.ptype} g{v.genus}{mark}"];'
            )
        for e in self.edges:
            lines.append(f'  n{e.u} -- n{e.v} [len="{format_length(e.length)}"];')
        lines.append("}")
        return "\n".join(lines)


def _strictly_below(x: Point, y: Point) -> bool:
    return point_leq(x, y) and not point_eq(x, y)


def _recentre_on_inputs(v: Point, pts) -> Point:
    if not isinstance(v, DiscPoint):
        return v
    k = v.field
    best = None
    for p in pts:
        c = _anchor(p)[0]
        if k.valuation(k.sub(c, v.center)) <= v.radius:
            text = k.format_element(c)
            if best is None or text < best[0]:
                best = (text, c)
    return v if best is None else DiscPoint(k, best[1], v.radius)


def convex_hull(points) -> SkeletonGraph:
    """Minimal subtree spanning the given points.

    Vertices are the inputs plus all pairwise joins (deduplicated);
    each non-root vertex is wired to the smallest vertex strictly above
    it, which is well defined because everything above a point forms a
    nested chain of discs.  Leaf edges down to radius-zero points carry
    infinite length.
    """
    pts = list(points)
    if not pts:
        raise DomainError("hull of an empty point set")
    field = pts[0].field
    for p in pts:
        if isinstance(p, ChainPoint):
            raise DomainError("hulls of chain points are not supported")
        if p.field != field:
            raise DomainError("points belong to different coefficient fields")

    verts: list = []

    def add(pt: Point) -> None:
        for v in verts:
            if point_eq(v, pt):
                return
        verts.append(pt)

    for p in pts:
        add(p)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            add(join(pts[i], pts[j]))

    # Joins inherit a center from whichever operand came first, so two
    # input orders can leave different (equal) representatives.  Recentre
    # each disc on its smallest contained input anchor to make vertex
    # labels a function of the point set alone.
    verts = [_recentre_on_inputs(v, pts) for v in verts]

    order = sorted(range(len(verts)), key=lambda i: format_point(verts[i]))
    vertex_objs = []
    for vid, old in enumerate(order):
        p = verts[old]
        vertex_objs.append(SkeletonVertex(vid, p, classify(p).type))

    edges = []
    for v in vertex_objs:
        uppers = [
            w for w in vertex_objs if _strictly_below(v.point, w.point)
        ]
        if not uppers:
            continue
        parent = uppers[0]
        for w in uppers[1:]:
            if _strictly_below(w.point, parent.point):
                parent = w
        ev = _radius_exponent_or_inf(_anchor(v.point)[1])
        ep = _anchor(parent.point)[1].exponent
        length: Length = INF if ev is INF else ev - ep
        edges.append(SkeletonEdge(v.id, parent.id, length))

    marked = frozenset(
        v.id for v in vertex_objs if any(point_eq(v.point, p) for p in pts)
    )
    edges.sort(key=lambda e: (e.u, e.v))
    return SkeletonGraph(tuple(vertex_objs), tuple(edges), marked)


def _on_graph(x: Point, g: SkeletonGraph) -> bool:
    for v in g.vertices:
        if v.point is not None and point_eq(x, v.point):
            return True
    for e in g.edges:
        u = g.vertex(e.u).point
        w = g.vertex(e.v).point
        if u is None:
            continue
        if w is None:
            if point_leq(u, x):
                return True
        elif point_leq(u, x) and point_leq(x, w):
            return True
    return False


def top_vertex(g: SkeletonGraph) -> SkeletonVertex:
    """Highest vertex with an honest point (the root of the disc order)."""
    real = [v for v in g.vertices if v.point is not None]
    top = real[0]
    for v in real[1:]:
        if point_leq(top.point, v.point):
            top = v
    return top


def retract_to_hull(x: Point, g: SkeletonGraph) -> Point:
    """Nearest point of the subtree ``g``, the gate every path to ``g``
    passes through."""
    if isinstance(x, ChainPoint):
        raise DomainError("retraction of chain points is not supported")
    if not g.vertices:
        raise DomainError("retraction onto an empty graph")
    if _on_graph(x, g):
        return x
    top = top_vertex(g)
    if point_leq(x, top.point):
        # x sits inside the top disc: it climbs until it first meets the
        # tree, at the lowest of its joins with the vertices.
        best = None
        for v in g.vertices:
            if v.point is None:
                continue
            z = join(x, v.point)
            if best is None or point_leq(z, best):
                best = z
        return best
    if any(g.vertex(e.v).point is None for e in g.edges):
        return join(x, top.point)  # lands on the infinite upward ray
    return top.point


# ---------------------------------------------------------------------
# Text forms


def format_point(x: Point) -> str:
    k = x.field
    if isinstance(x, Type1Point):
        return f"pt1({k.format_element(x.center)})"
    if isinstance(x, DiscPoint):
        return f"disc({k.format_element(x.center)}; {format_exponent(x.radius.exponent)})"
    items = ",".join(
        f"({format_exponent(r.exponent)};{k.format_element(c)})" for c, r in x.discs
    )
    tail = "" if x.limit_exponent is None else f"; limit={format_exponent(x.limit_exponent)}"
    return f"chain[{items}{tail}]"


def parse_point(field: ValuedField, text: str) -> Point:
    s = "".join(text.split())
    if s.startswith("pt1(") and s.endswith(")"):
        return Type1Point(field, field.parse_element(s[4:-1]))
    if s.startswith("disc(") and s.endswith(")"):
        body = s[5:-1]
        if ";" not in body:
            raise ParseError("point", text, "disc needs a center and an exponent")
        elem, exp = body.split(";", 1)
        radius = Magnitude.finite(parse_exponent(exp))
        try:
            return DiscPoint(field, field.parse_element(elem), radius)
        except DomainError as exc:
            raise ParseError("point", text, str(exc)) from None
    if s.startswith("chain[") and s.endswith("]"):
        body = s[6:-1]
        limit = None
        if ";limit=" in body:
            body, limit_text = body.rsplit(";limit=", 1)
            limit = parse_exponent(limit_text)
        discs = []
        for item in _split_chain_items(body, text):
            if not (item.startswith("(") and item.endswith(")")) or ";" not in item:
                raise ParseError("point", text, f"bad chain entry {item!r}")
            exp, elem = item[1:-1].split(";", 1)
            discs.append(
                (field.parse_element(elem), Magnitude.finite(parse_exponent(exp)))
            )
        try:
            return ChainPoint(field, tuple(discs), limit)
        except DomainError as exc:
            raise ParseError("point", text, str(exc)) from None
    raise ParseError("point", text)


def _split_chain_items(body: str, original: str):
    items = []
    cur = ""
    depth = 0
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append(cur)
            cur = ""
        else:
            cur += ch
    if cur:
        items.append(cur)
    if not items or depth != 0:
        raise ParseError("point", original, "bad chain syntax")
    return items
