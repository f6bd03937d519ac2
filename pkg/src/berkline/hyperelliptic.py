"""Double covers S**2 = f(T) with squarefree f given by its roots.

Everything is driven by where the branch points (the roots, plus the
point at infinity when the degree is odd) sit in the tree of discs:

* the fiber over a disc point has 2 points exactly when f admits a
  square root in the local ring there, detected through residue
  polynomials (type 2) or through the parity of the dominant term
  (type 3);
* the skeleton of the cover is the convex hull of the branch points,
  each vertex and edge decorated with its fiber count, computed by
  parity counts of branch points per direction;
* the genus splits into local vertex genera plus the number of
  independent cycles of the doubled graph.

Residue characteristic 2 is rejected up front: the cover is wildly
ramified there and none of the parity reasoning applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .errors import DomainError
from .exponents import INF, Exponent, Magnitude
from .fields import ValuedField
from .line import (
    DiscPoint,
    Point,
    SkeletonEdge,
    SkeletonGraph,
    SkeletonVertex,
    Type1Point,
    classify,
    convex_hull,
    point_leq,
    top_vertex,
)
from .polynomials import Poly, squarefree_decomposition, taylor_shift


def _reject_residue_char_2(field: ValuedField) -> None:
    if field.residue_char == 2:
        raise DomainError("residue characteristic 2 is not supported")


@dataclass(frozen=True)
class BranchData:
    """Squarefree polynomial presented through its full root list."""

    f: Poly
    roots: Tuple[object, ...]
    lead: object
    infinity_branch: bool

    @staticmethod
    def from_roots(field: ValuedField, roots, lead=None) -> "BranchData":
        _reject_residue_char_2(field)
        rs = tuple(roots)
        if not rs:
            raise DomainError("at least one root is required")
        for i in range(len(rs)):
            for j in range(i + 1, len(rs)):
                if field.is_zero(field.sub(rs[i], rs[j])):
                    raise DomainError("roots must be pairwise distinct")
        lc = field.one if lead is None else lead
        if field.is_zero(lc):
            raise DomainError("leading coefficient must be nonzero")
        f = Poly.constant(field, lc)
        for r in rs:
            f = f * Poly.make(field, (field.neg(r), field.one))
        return BranchData(f, rs, lc, len(rs) % 2 == 1)

    @property
    def degree(self) -> int:
        return len(self.roots)

    @property
    def total_branch_points(self) -> int:
        return self.degree + (1 if self.infinity_branch else 0)


# ---------------------------------------------------------------------
# Fibers over individual points


def _term_exponents(f: Poly, x: DiscPoint):
    """Exponents of |f_i| * r**i for the expansion of f at the center of
    x; None entries mark vanishing coefficients."""
    k = f.field
    g = taylor_shift(f, x.center) if not k.is_zero(x.center) else f
    e_r = x.radius.exponent
    out = []
    for i, c in enumerate(g.coeffs):
        if k.is_zero(c):
            out.append((None, c))
        else:
            out.append((k.valuation(c).exponent + e_r.scale(i), c))
    return g, out


def _halvable_exponent(field: ValuedField, e: Exponent) -> bool:
    """Is rho**e a square inside the value group of the field?

    Puiseux magnitudes form a divisible group, so always; p-adic
    magnitudes need an even integer exponent; the trivial group has
    only the unit."""
    from .fields import PAdicField, PuiseuxField

    if isinstance(field, PuiseuxField):
        return True
    if isinstance(field, PAdicField):
        return e.is_rational() and e.a.denominator == 1 and e.a.numerator % 2 == 0
    return e == Exponent(0)


def fiber_count(bd: BranchData, x: Point, strict_squares: bool = False):
    """Number of points of the cover above a disc point: 2 or 1.

    In strict mode the answer is about the configured field itself
    rather than its algebraic closure; ``None`` means one point here
    but two after an unramified extension (undetermined over this
    field).
    """
    t = classify(x).type
    if t not in (2, 3):
        raise DomainError("fiber counts are computed at disc points only")
    if bd.f.field != x.field:
        raise DomainError("cover and point fields differ")
    k = bd.f.field
    g, terms = _term_exponents(bd.f, x)
    live = [(e, i) for i, (e, _) in enumerate(terms) if e is not None]
    e_min = min(e for e, _ in live)

    if t == 3:
        dominant = [i for e, i in live if e == e_min]
        if len(dominant) != 1:
            raise DomainError("irrational radius must single out one dominant term")
        i_star = dominant[0]
        if i_star % 2 == 1:
            return 1
        if not strict_squares:
            return 2
        e_c = k.valuation(g.coefficient(i_star)).exponent
        if not _halvable_exponent(k, e_c):
            return None
        m0 = k.element_with_valuation(e_c)
        if m0 is None:
            return None
        u = k.residue_of_quotient(g.coefficient(i_star), m0)
        return 2 if k.residue_field.is_square(u) else None

    # Type 2: rescale the variable so the disc becomes the unit disc,
    # divide out the largest coefficient magnitude, and read the residue
    # polynomial.  Two preimages exactly when it is a constant times a
    # square, which over a perfect residue field means every root
    # multiplicity of its squarefree decomposition is even.
    c = k.element_with_valuation(x.radius.exponent)
    if c is None:
        raise DomainError("no field element realizes this radius")
    m0 = k.element_with_valuation(e_min)
    if m0 is None:
        raise DomainError("no field element realizes the dominant magnitude")
    rf = k.residue_field
    cpow = k.one
    res_coeffs = []
    for i, ci in enumerate(g.coeffs):
        res_coeffs.append(k.residue_of_quotient(k.mul(ci, cpow), m0))
        cpow = k.mul(cpow, c)
    u = Poly.make(rf, tuple(res_coeffs))
    parts = squarefree_decomposition(u)
    if any(mult % 2 == 1 for _, mult in parts):
        return 1
    if not strict_squares:
        return 2
    if not _halvable_exponent(k, e_min):
        return None
    # the factors are monic, so the constant in front of the square is
    # exactly the leading coefficient
    return 2 if rf.is_square(u.leading_coefficient()) else None


# ---------------------------------------------------------------------
# Cover skeletons and genus bookkeeping


@dataclass(frozen=True)
class CoverSkeleton:
    base: SkeletonGraph
    vertex_fibers: Tuple[int, ...]
    edge_split: Tuple[bool, ...]
    vertex_genus: Tuple[int, ...]
    betti: int
    total_genus: int


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def cover_skeleton(bd: BranchData) -> CoverSkeleton:
    k = bd.f.field
    root_points = [Type1Point(k, r) for r in bd.roots]
    hull = convex_hull(root_points)

    vertices = list(hull.vertices)
    edges = list(hull.edges)
    if bd.infinity_branch:
        apex = top_vertex(hull)
        inf_id = len(vertices)
        vertices.append(SkeletonVertex(inf_id, None, 1, 0))
        edges.append(SkeletonEdge(apex.id, inf_id, INF))

    total = bd.total_branch_points

    def below(vid: int) -> int:
        pt = vertices[vid].point
        if pt is None:
            return bd.degree
        return sum(1 for rp in root_points if point_leq(rp, pt))

    # m(v) = number of directions at v carrying an odd count of branch
    # points: one direction per incident edge (the downward ones hold
    # everything below the child, the upward one holds the rest,
    # including infinity), plus nothing for branch points sitting at v
    # itself.
    fibers: List[int] = []
    genera: List[int] = []
    for v in vertices:
        m = 0
        has_up = False
        for e in edges:
            if e.v == v.id:
                if below(e.u) % 2 == 1:
                    m += 1
            elif e.u == v.id:
                has_up = True
                if (total - below(v.id)) % 2 == 1:
                    m += 1
        if v.point is not None and not has_up and (total - below(v.id)) % 2 == 1:
            # the top vertex still has an outward direction toward
            # infinity even when no ray was added
            m += 1
        fibers.append(2 if m == 0 else 1)
        genera.append(max(m // 2 - 1, 0))

    split = [below(e.u) % 2 == 0 for e in edges]

    # Doubled graph: each vertex contributes `fibers` copies, each edge
    # two copies when split and one otherwise.  A non-split edge always
    # has two single-fiber endpoints (every edge at a two-fiber vertex
    # is split), so the wiring below is exhaustive.
    copy_ids = {}
    n_copies = 0
    for v in vertices:
        copy_ids[v.id] = list(range(n_copies, n_copies + fibers[v.id]))
        n_copies += fibers[v.id]

    doubled_edges = []
    for e, is_split in zip(edges, split):
        us = copy_ids[e.u]
        vs = copy_ids[e.v]
        if is_split:
            if len(us) == 2 and len(vs) == 2:
                doubled_edges.append((us[0], vs[0], e.length))
                doubled_edges.append((us[1], vs[1], e.length))
            elif len(us) == 1 and len(vs) == 2:
                doubled_edges.append((us[0], vs[0], e.length))
                doubled_edges.append((us[0], vs[1], e.length))
            elif len(us) == 2 and len(vs) == 1:
                doubled_edges.append((us[0], vs[0], e.length))
                doubled_edges.append((us[1], vs[0], e.length))
            else:
                doubled_edges.append((us[0], vs[0], e.length))
                doubled_edges.append((us[0], vs[0], e.length))
        else:
            if len(us) != 1 or len(vs) != 1:
                raise DomainError("non-split edge at a two-fiber vertex")
            doubled_edges.append((us[0], vs[0], e.length))

    uf = _UnionFind(n_copies)
    for a, b, _ in doubled_edges:
        uf.union(a, b)
    components = len({uf.find(i) for i in range(n_copies)})
    betti = len(doubled_edges) - n_copies + components

    total_genus = sum(genera) + betti

    decorated = tuple(
        SkeletonVertex(v.id, v.point, v.ptype, genera[v.id]) for v in vertices
    )
    base = SkeletonGraph(decorated, tuple(edges), hull.marked)
    return CoverSkeleton(
        base, tuple(fibers), tuple(split), tuple(genera), betti, total_genus
    )


def genus(bd: BranchData) -> int:
    return cover_skeleton(bd).total_genus


def tate_cycle_exponent(cs: CoverSkeleton) -> Exponent:
    """Total length of the unique cycle of the doubled graph.

    Only meaningful when betti = 1; extracted by pruning degree-one
    vertices of the doubled graph until the cycle remains.
    """
    if cs.betti != 1:
        raise DomainError("cycle extraction needs first Betti number 1")
    copy_ids = {}
    n = 0
    for v in cs.base.vertices:
        copy_ids[v.id] = list(range(n, n + cs.vertex_fibers[v.id]))
        n += cs.vertex_fibers[v.id]
    edge_list = []
    for e, is_split in zip(cs.base.edges, cs.edge_split):
        us, vs = copy_ids[e.u], copy_ids[e.v]
        if is_split:
            if len(us) == 2 and len(vs) == 2:
                edge_list += [(us[0], vs[0], e.length), (us[1], vs[1], e.length)]
            elif len(us) == 1 and len(vs) == 2:
                edge_list += [(us[0], vs[0], e.length), (us[0], vs[1], e.length)]
            elif len(us) == 2 and len(vs) == 1:
                edge_list += [(us[0], vs[0], e.length), (us[1], vs[0], e.length)]
            else:
                edge_list += [(us[0], vs[0], e.length), (us[0], vs[0], e.length)]
        else:
            edge_list.append((us[0], vs[0], e.length))

    alive = [True] * len(edge_list)
    while True:
        deg = {}
        for idx, (a, b, _) in enumerate(edge_list):
            if alive[idx]:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
        pruned = False
        for idx, (a, b, _) in enumerate(edge_list):
            if alive[idx] and (deg.get(a, 0) == 1 or deg.get(b, 0) == 1):
                alive[idx] = False
                pruned = True
        if not pruned:
            break
    total = Exponent(0)
    for idx, (a, b, length) in enumerate(edge_list):
        if alive[idx]:
            if length is INF:
                raise DomainError("unbounded edge on the cycle")
            total = total + length
    return total


# ---------------------------------------------------------------------
# Elliptic reduction through the Legendre parameter


@dataclass(frozen=True)
class Multiplicative:
    """Degenerate reduction; the skeleton is a cycle whose modulus is
    rho to this exponent."""

    cycle_exponent: Exponent
    via: str


@dataclass(frozen=True)
class GoodReduction:
    lambda_residue: object
    j_residue: object


EllipticReduction = Union[Multiplicative, GoodReduction]


def mobius_orbit(field: ValuedField, lam):
    """The six values of the Legendre parameter giving one curve."""
    one = field.one
    lam1 = field.sub(lam, one)
    return (
        lam,
        field.div(one, lam),
        field.neg(lam1),
        field.neg(field.div(one, lam1)),
        field.div(lam, lam1),
        field.div(lam1, lam),
    )


def _j_residue(rf, u):
    """j-invariant image 256 (u**2 - u + 1)**3 / (u**2 (u - 1)**2) in
    the residue field; defined since u avoids 0 and 1."""
    one = rf.one
    usq = rf.mul(u, u)
    num_core = rf.add(rf.sub(usq, u), one)
    num = rf.mul(rf.from_int(256), rf.mul(num_core, rf.mul(num_core, num_core)))
    um1 = rf.sub(u, one)
    den = rf.mul(usq, rf.mul(um1, um1))
    return rf.div(num, den)


def elliptic_reduction(field: ValuedField, lam) -> EllipticReduction:
    """Reduction type of the curve with Legendre parameter lambda.

    Decided through valuations alone, so it works over backends where
    the Moebius substitutions themselves are not representable: any
    parameter with |lam| != 1 or |lam - 1| != 1 is equivalent to one
    with magnitude above 1, and the cycle exponent only needs the
    relevant valuation, doubled.
    """
    _reject_residue_char_2(field)
    one = field.one
    if field.is_zero(lam) or field.is_zero(field.sub(lam, one)):
        raise DomainError("the parameter must avoid 0 and 1")
    e1 = field.valuation(lam).exponent
    e2 = field.valuation(field.sub(lam, one)).exponent
    if e1.sign() < 0:
        return Multiplicative(abs(e1).scale(2), "lambda")
    if e1.sign() > 0:
        return Multiplicative(e1.scale(2), "1/lambda")
    if e2.sign() > 0:
        return Multiplicative(e2.scale(2), "1/(1-lambda)")
    rf = field.residue_field
    u = field.residue(lam)
    return GoodReduction(u, _j_residue(rf, u))
