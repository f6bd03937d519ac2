"""Points of the line: classification, seminorms, tree geometry, hulls."""

import random
from fractions import Fraction

import pytest

from berkline import (
    INF,
    INFINITY_DIR,
    MAG_ONE,
    ChainPoint,
    Components,
    DiscPoint,
    DomainError,
    Exponent,
    Magnitude,
    ParseError,
    PointClass,
    Type1Point,
    classify,
    components_count,
    convex_hull,
    direction,
    eval_seminorm,
    format_point,
    join,
    parse_point,
    parse_poly,
    path,
    point_eq,
    point_leq,
    point_radius,
    retract_to_hull,
    seminorm_is_exact,
    taylor_shift,
    top_vertex,
    torus_retract,
)
from helpers import LSER, Q5, rand_element, rand_point, rand_poly, rand_radius


def fin(a, b=0) -> Magnitude:
    return Magnitude.finite(Exponent(Fraction(a), Fraction(b)))


def pt1(field, x):
    return Type1Point(field, field.parse_element(x) if isinstance(x, str) else x)


GAUSS = DiscPoint(Q5, Fraction(0), MAG_ONE)


def _chain3():
    return ChainPoint(
        Q5,
        ((Fraction(0), fin(1)), (Fraction(5), fin(2)), (Fraction(30), fin(3))),
    )


# -- classification ---------------------------------------------------


def test_classify_frozen():
    assert classify(pt1(Q5, "0")) == PointClass(1, 0, 0)
    assert classify(DiscPoint(Q5, Fraction(0), fin(Fraction(1, 2)))) == PointClass(2, 0, 1)
    assert classify(DiscPoint(Q5, Fraction(0), fin(0, 1))) == PointClass(3, 1, 0)
    assert classify(_chain3()) == PointClass(4, 0, 0)


def test_components_frozen():
    assert components_count(DiscPoint(Q5, Fraction(0), fin(0, 1))) is Components.TWO
    assert components_count(pt1(Q5, "0")) is Components.ONE
    assert components_count(GAUSS) is Components.P1_OF_RESIDUE
    assert components_count(_chain3()) is Components.ONE


def test_point_radius_and_exactness():
    assert point_radius(pt1(Q5, "3")).value.is_zero
    assert point_radius(GAUSS) == point_radius(GAUSS)
    c = _chain3()
    info = point_radius(c)
    assert info.value == fin(3) and not info.exact
    limited = ChainPoint(Q5, c.discs, limit_exponent=Exponent(4))
    assert point_radius(limited).value == fin(4)
    assert point_radius(limited).exact
    assert not seminorm_is_exact(c)
    assert seminorm_is_exact(GAUSS)


def test_chain_validation():
    with pytest.raises(DomainError):
        ChainPoint(Q5, ((Fraction(0), fin(1)), (Fraction(0), fin(1))))
    with pytest.raises(DomainError):  # second disc escapes the first
        ChainPoint(Q5, ((Fraction(0), fin(1)), (Fraction(1), fin(2))))
    with pytest.raises(DomainError):  # limit above a listed radius
        ChainPoint(Q5, ((Fraction(0), fin(2)),), limit_exponent=Exponent(1))
    with pytest.raises(DomainError):
        ChainPoint(Q5, ())


# -- seminorm evaluation ----------------------------------------------


def test_eval_frozen():
    var = parse_poly(Q5, "T")
    assert eval_seminorm(var, DiscPoint(Q5, Fraction(0), fin(1))) == fin(1)
    f = parse_poly(Q5, "T^2 + 5*T + 125")
    assert eval_seminorm(f, DiscPoint(Q5, Fraction(0), fin(Fraction(1, 2)))) == fin(1)
    assert eval_seminorm(var, pt1(Q5, "1/5")) == fin(-1)
    assert eval_seminorm(parse_poly(Q5, "25"), GAUSS) == fin(2)
    assert eval_seminorm(parse_poly(Q5, "0"), GAUSS).is_zero


def test_eval_matches_term_enumeration():
    rng = random.Random(61)
    for field in (Q5, LSER):
        for _ in range(40):
            f = rand_poly(rng, field, max_deg=6)
            a = rand_element(rng, field)
            r = rand_radius(rng)
            x = DiscPoint(field, a, r)
            shifted = taylor_shift(f, a)
            expected = Magnitude.zero()
            for i in range(shifted.degree + 1):
                term = field.valuation(shifted.coefficient(i)) * r ** i
                expected = max(expected, term)
            assert eval_seminorm(f, x) == expected


def test_eval_multiplicative_and_ultrametric():
    rng = random.Random(67)
    for field in (Q5, LSER):
        for _ in range(40):
            f, g = rand_poly(rng, field, 5), rand_poly(rng, field, 5)
            x = rand_point(rng, field)
            assert eval_seminorm(f * g, x) == eval_seminorm(f, x) * eval_seminorm(g, x)
            s = eval_seminorm(f + g, x)
            assert s <= max(eval_seminorm(f, x), eval_seminorm(g, x))


def test_disc_point_dominates_its_disc():
    rng = random.Random(71)
    for _ in range(60):
        f = rand_poly(rng, Q5, 5)
        a = rand_element(rng, Q5)
        x = DiscPoint(Q5, a, fin(Fraction(rng.randint(-3, 3))))
        # points of E(a, r): centers a + delta with |delta| <= r
        delta = Q5.mul(
            Q5.element_with_valuation(x.radius.exponent), Fraction(rng.randint(0, 9))
        )
        y = Type1Point(Q5, Q5.add(a, delta))
        assert point_leq(y, x)
        assert eval_seminorm(f, y) <= eval_seminorm(f, x)


def test_chain_eval_is_innermost_and_monotone():
    c = _chain3()
    f = parse_poly(Q5, "T")
    vals = [
        eval_seminorm(f, DiscPoint(Q5, ctr, r)) for ctr, r in c.discs
    ]
    assert eval_seminorm(f, c) == vals[-1]
    assert all(not vals[i] < vals[i + 1] for i in range(len(vals) - 1))


def test_torus_retract():
    rng = random.Random(73)
    for _ in range(40):
        f = rand_poly(rng, Q5, 5)
        a = rand_element(rng, Q5)
        t = rand_radius(rng)
        assert torus_retract(f, pt1(Q5, a), t) == eval_seminorm(f, DiscPoint(Q5, a, t))
        r = rand_radius(rng)
        x = DiscPoint(Q5, a, r)
        assert torus_retract(f, x, t) == eval_seminorm(f, DiscPoint(Q5, a, max(r, t)))
    assert torus_retract(parse_poly(Q5, "25"), GAUSS, fin(3)) == fin(2)
    with pytest.raises(DomainError):
        torus_retract(parse_poly(Q5, "T"), _chain3(), fin(1))
    with pytest.raises(DomainError):
        torus_retract(parse_poly(Q5, "T"), GAUSS, Magnitude.zero())


# -- tree order, joins, paths -----------------------------------------


def test_point_leq_frozen():
    assert point_leq(pt1(Q5, "0"), DiscPoint(Q5, Fraction(0), fin(1)))
    a = DiscPoint(Q5, Fraction(0), fin(1))
    b = DiscPoint(Q5, Fraction(5), fin(1))
    assert point_leq(a, b) and point_leq(b, a) and point_eq(a, b)
    # smaller exponent = larger disc, so containment runs the other way
    assert not point_leq(DiscPoint(Q5, Fraction(0), fin(Fraction(1, 2))), a)
    assert point_leq(a, DiscPoint(Q5, Fraction(0), fin(Fraction(1, 2))))


def test_join_frozen():
    g = join(pt1(Q5, "0"), pt1(Q5, "1"))
    assert point_eq(g, GAUSS)
    assert point_eq(join(pt1(Q5, "0"), pt1(Q5, "5")), DiscPoint(Q5, Fraction(0), fin(1)))
    x = DiscPoint(Q5, Fraction(2), fin(Fraction(1, 3)))
    assert point_eq(join(x, x), x)


def test_join_laws():
    rng = random.Random(79)
    for field in (Q5, LSER):
        for _ in range(60):
            x, y, z = (rand_point(rng, field) for _ in range(3))
            assert point_eq(join(x, y), join(y, x))
            assert point_eq(join(x, join(y, z)), join(join(x, y), z))
            assert point_leq(x, join(x, y))
            assert point_leq(y, join(x, y))
            if point_leq(x, y):
                assert point_eq(join(x, y), y)


def test_path_frozen():
    p = path(pt1(Q5, "0"), pt1(Q5, "1"))
    assert len(p.segments) == 2
    assert p.length is INF
    first, second = p.segments
    assert first.center == Fraction(0) and first.e_from is INF
    assert first.e_to == Exponent(0)
    assert second.center == Fraction(1) and second.e_to is INF
    x = DiscPoint(Q5, Fraction(3), fin(2))
    assert path(x, x).segments == ()
    assert path(x, x).length == Exponent(0)
    q = path(DiscPoint(Q5, Fraction(0), fin(2)), DiscPoint(Q5, Fraction(0), fin(1)))
    assert len(q.segments) == 1
    assert q.length == Exponent(1)


def test_path_additivity_through_join():
    rng = random.Random(83)
    for _ in range(60):
        x, y = rand_point(rng, Q5), rand_point(rng, Q5)
        z = join(x, y)
        total = path(x, y).length
        split = path(x, z).length + path(z, y).length
        if total is INF:
            assert split is INF
        else:
            assert split == total


def test_path_rejects_chains():
    with pytest.raises(DomainError):
        path(_chain3(), pt1(Q5, "0"))


def test_direction_frozen():
    assert direction(GAUSS, pt1(Q5, "7")) == 2
    assert direction(GAUSS, pt1(Q5, "1/5")) is INFINITY_DIR
    assert direction(GAUSS, DiscPoint(Q5, Fraction(5), fin(1))) == 0
    # two sub-points of one open sub-disc get the same label
    assert direction(GAUSS, pt1(Q5, "12")) == direction(GAUSS, pt1(Q5, "7"))
    assert direction(GAUSS, pt1(Q5, "3")) != direction(GAUSS, pt1(Q5, "7"))


def test_direction_needs_a_scaling_element():
    x = DiscPoint(Q5, Fraction(0), fin(Fraction(1, 2)))
    with pytest.raises(DomainError):
        direction(x, pt1(Q5, "0"))
    with pytest.raises(DomainError):  # type 3 has no residue directions
        direction(DiscPoint(Q5, Fraction(0), fin(0, 1)), pt1(Q5, "0"))


# -- hulls and retraction ----------------------------------------------


def test_hull_frozen_five_points():
    g = convex_hull([pt1(Q5, "0"), pt1(Q5, "1"), pt1(Q5, "5")])
    labels = [format_point(v.point) for v in g.vertices]
    assert labels == ["disc(0; 0)", "disc(0; 1)", "pt1(0)", "pt1(1)", "pt1(5)"]
    assert {(e.u, e.v) for e in g.edges} == {(1, 0), (2, 1), (3, 0), (4, 1)}
    by_pair = {(e.u, e.v): e.length for e in g.edges}
    assert by_pair[(1, 0)] == Exponent(1)
    assert by_pair[(2, 1)] is INF and by_pair[(3, 0)] is INF and by_pair[(4, 1)] is INF
    assert g.marked == frozenset({2, 3, 4})
    assert point_eq(top_vertex(g).point, GAUSS)


def test_hull_small_cases():
    single = convex_hull([GAUSS])
    assert len(single.vertices) == 1 and not single.edges
    two = convex_hull([pt1(Q5, "0"), pt1(Q5, "1")])
    assert len(two.vertices) == 3 and len(two.edges) == 2
    nested = convex_hull(
        [DiscPoint(Q5, Fraction(0), fin(2)), DiscPoint(Q5, Fraction(0), fin(1))]
    )
    assert len(nested.vertices) == 2 and len(nested.edges) == 1


def test_hull_is_order_independent():
    rng = random.Random(89)
    for _ in range(25):
        pts = [rand_point(rng, Q5) for _ in range(rng.randint(2, 5))]
        g = convex_hull(pts)
        shuffled = pts[:]
        rng.shuffle(shuffled)
        assert convex_hull(shuffled).canonical_key() == g.canonical_key()


def test_hull_dedupes_equal_points():
    a = DiscPoint(Q5, Fraction(0), fin(1))
    b = DiscPoint(Q5, Fraction(5), fin(1))  # same point, other center
    g = convex_hull([a, b])
    assert len(g.vertices) == 1


def test_retract_frozen():
    g = convex_hull([pt1(Q5, "0"), GAUSS])
    assert point_eq(retract_to_hull(pt1(Q5, "5"), g), DiscPoint(Q5, Fraction(0), fin(1)))
    assert point_eq(retract_to_hull(pt1(Q5, "0"), g), pt1(Q5, "0"))
    lone = convex_hull([GAUSS])
    assert point_eq(retract_to_hull(pt1(Q5, "3"), lone), GAUSS)
    assert point_eq(retract_to_hull(pt1(Q5, "1/5"), lone), GAUSS)


def test_retract_is_idempotent_and_lands_on_hull():
    rng = random.Random(97)
    for _ in range(30):
        pts = [rand_point(rng, Q5) for _ in range(rng.randint(1, 4))]
        g = convex_hull(pts)
        x = rand_point(rng, Q5)
        r = retract_to_hull(x, g)
        assert point_eq(retract_to_hull(r, g), r)
        for p in pts:
            if point_eq(x, p):
                assert point_eq(r, x)


# -- text forms --------------------------------------------------------


def test_point_text_roundtrip():
    cases = [
        "pt1(0)",
        "pt1(1/5)",
        "disc(7; 1/3)",
        "disc(0; 1+1*s2)",
        "chain[(1;0),(2;5); limit=4]",
    ]
    for text in cases:
        x = parse_point(Q5, text)
        assert format_point(x) == text
    y = parse_point(LSER, "disc(t^(1/2); 3/2)")
    assert format_point(y) == "disc(t^(1/2); 3/2)"


def test_point_parse_errors():
    for bad in ("disc(0 1/2)", "pt1()", "blob(3)", "chain[]", "disc(0; )"):
        with pytest.raises(ParseError):
            parse_point(Q5, bad)
