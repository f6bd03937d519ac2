#!/usr/bin/env python3
"""Scan the n-adic root estimates closing on the spectral seminorm.

For each modulus the table shows nadic_norm(x^m)^(1/m) as m doubles,
the closed-form spectral value it converges to, and whether the norm
alone is multiplicative at that modulus.  A second table walks the
p-adic branch of M(Z), where shrinking the branch parameter drags every
value toward the trivial norm.
"""

import argparse
from fractions import Fraction

from berkline import RM_ONE, ZPAdic, nadic_norm, nadic_spectral, zpoint_eval


def norm_table(n: int, xs, top: int) -> None:
    print(f"== |.|_{n}")
    a, b = 2, n // 2
    lhs = nadic_norm(Fraction(a * b), n)
    rhs = nadic_norm(Fraction(a), n) * nadic_norm(Fraction(b), n)
    tag = "multiplicative" if lhs == rhs else f"|{a}*{b}| < |{a}|*|{b}|"
    print(f"   {tag} on {a}, {b}")
    for x in xs:
        spec = nadic_spectral(x, n)
        cells = []
        m = 1
        while m <= top:
            est = nadic_norm(x**m, n).root(m)
            cells.append(f"m={m}:{est.to_float():.4f}")
            m *= 2
        print(f"   x={x}: {'  '.join(cells)}  -> spectral {spec.to_float():.4f} ({spec})")
    print()


def branch_table(p: int, xs) -> None:
    print(f"== p-adic branch at p={p}, r sliding toward the trivial point")
    radii = [Fraction(1, 2**k) for k in range(5)]
    header = "  ".join(f"r={r}" for r in radii)
    print(f"   {'x':>6}  {header}")
    for x in xs:
        vals = [zpoint_eval(ZPAdic(p, r), x) for r in radii]
        row = "  ".join(f"{v.to_float():.4f}" for v in vals)
        note = " (unit, stays at 1)" if vals[0] == RM_ONE else ""
        print(f"   {x:>6}  {row}{note}")
    print()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--top", type=int, default=64, help="largest power in the scan")
    args = ap.parse_args()
    for n in (6, 10, 12, 24):
        norm_table(n, [Fraction(6), Fraction(8, 9), Fraction(7, 25)], args.top)
    for p in (2, 5):
        branch_table(p, [50, 12, 7, -360])


if __name__ == "__main__":
    main()
