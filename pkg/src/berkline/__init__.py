"""Exact computations on the non-archimedean line of discs."""

from .errors import DomainError, ParseError
from .exponents import (
    EXP_ONE,
    EXP_ZERO,
    INF,
    MAG_ONE,
    MAG_ZERO,
    Exponent,
    Magnitude,
    Ordering,
    add_lengths,
    exp_compare,
    format_exponent,
    format_length,
    format_magnitude,
    is_rational_over_value_group,
    mag_max,
    mag_mul,
    mag_root,
    parse_exponent,
)
from .fields import (
    QQ,
    PAdicField,
    PrimeField,
    PuiseuxField,
    Rationals,
    TrivialField,
    parse_base_field,
    parse_field,
    ultrametric_check,
)
from .polynomials import (
    Poly,
    count_roots_in_disc,
    derivative,
    format_poly,
    hasse_derivative,
    is_constant_times_square,
    newton_slopes,
    parse_poly,
    poly_divmod,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
    taylor_shift,
)
from .line import (
    ChainPoint,
    Components,
    DiscPoint,
    INFINITY_DIR,
    Path,
    PathSegment,
    Point,
    PointClass,
    RadiusInfo,
    SkeletonEdge,
    SkeletonGraph,
    SkeletonVertex,
    Type1Point,
    classify,
    components_count,
    convex_hull,
    direction,
    eval_seminorm,
    format_point,
    join,
    parse_point,
    path,
    point_eq,
    point_leq,
    point_radius,
    retract_to_hull,
    seminorm_is_exact,
    top_vertex,
    torus_retract,
)
from .domains import (
    Annulus,
    ClosedDisc,
    DiscMinusHoles,
    Domain,
    DomainClass,
    GENERIC,
    Inequality,
    Rel,
    StandardDomain,
    boundary_points,
    domain_intersect,
    format_domain,
    format_standard_domain,
    in_interior,
    max_modulus_check,
    member,
    membership_is_exact,
    parse_domain,
    parse_standard_domain,
    reduce_point,
    shilov_boundary,
    to_domain,
)
from .zspectrum import (
    RM_ONE,
    LimitReport,
    RealMag,
    ZArch,
    ZPAdic,
    ZPAdicInfty,
    ZPoint,
    ZTrivial,
    format_zpoint,
    nadic_norm,
    nadic_spectral,
    parse_zpoint,
    prime_factors,
    zpoint_eval,
    zpoint_is_multiplicative_on,
    zpoint_limit_check,
)
from .hyperelliptic import (
    BranchData,
    CoverSkeleton,
    EllipticReduction,
    GoodReduction,
    Multiplicative,
    cover_skeleton,
    elliptic_reduction,
    fiber_count,
    genus,
    mobius_orbit,
    tate_cycle_exponent,
)

__version__ = "0.1.0"
