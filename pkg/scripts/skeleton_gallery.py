#!/usr/bin/env python3
"""Print skeletons of double covers for a gallery of root layouts.

Each entry lists the branch roots, the skeleton vertices with their
fiber counts and genera, the split/inert flag per edge, and the totals.
With ``--dot`` the base skeleton of the final entry is emitted as
Graphviz DOT instead, ready for ``dot -Tsvg``.
"""

import argparse
from fractions import Fraction

from berkline import (
    BranchData,
    PAdicField,
    PuiseuxField,
    Rationals,
    cover_skeleton,
    format_length,
    genus,
)


def gallery(field_name: str):
    if field_name == "padic:5":
        k = PAdicField(5)
        e = [Fraction(n) for n in range(8)]
        return k, [
            ("two points, one disc", [e[0], e[1]]),
            ("good reduction, genus one", [e[0], e[1], e[2]]),
            ("split pair below the Gauss disc", [e[0], e[5], e[1], e[6]]),
            ("three residue classes, genus two", [e[0], e[1], e[2], e[3], e[5]]),
        ]
    k = PuiseuxField(Rationals())
    p = k.parse_element
    return k, [
        ("degenerate elliptic, cycle of length two", [k.zero, k.one, p("t^(-1)")]),
        ("wider cycle, modulus six", [k.zero, k.one, p("t^(-3)")]),
        ("two clusters of genus zero, loops instead", [k.zero, p("t"), k.one, p("1+t"), p("2")]),
        ("depth mixes into the edge lengths", [k.zero, p("t^(2)"), p("t"), k.one, p("2"), p("2+t^(3)")]),
    ]


def describe(name: str, bd: BranchData) -> None:
    cs = cover_skeleton(bd)
    print(f"== {name}")
    print(f"   degree {bd.degree}, branch points {bd.total_branch_points}, "
          f"genus {genus(bd)}, betti {cs.betti}")
    for v in cs.base.vertices:
        mark = " *" if v.id in cs.base.marked else ""
        print(f"   v{v.id}: {v.label}  fibers={cs.vertex_fibers[v.id]} "
              f"genus={cs.vertex_genus[v.id]}{mark}")
    for i, e in enumerate(cs.base.edges):
        kind = "split" if cs.edge_split[i] else "inert"
        print(f"   e{i}: v{e.u} -- v{e.v}  len={format_length(e.length)}  {kind}")
    print()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="puiseux:Q", choices=["puiseux:Q", "padic:5"])
    ap.add_argument("--dot", action="store_true", help="emit DOT for the last entry")
    args = ap.parse_args()
    field, entries = gallery(args.field)
    if args.dot:
        name, roots = entries[-1]
        cs = cover_skeleton(BranchData.from_roots(field, roots))
        print(cs.base.to_dot())
        return
    for name, roots in entries:
        describe(name, BranchData.from_roots(field, roots))


if __name__ == "__main__":
    main()
