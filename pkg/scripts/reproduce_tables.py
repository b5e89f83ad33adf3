#!/usr/bin/env python3
"""Regenerate the package's reference tables on stdout.

Covers the integer value table on rational classes, the class list
itself, low product decompositions, character expansion lines, and a
grid census.  Everything is recomputed from scratch; nothing is read
from fixtures, so this doubles as a smoke test of the symbolic layer.
"""

import argparse
from dataclasses import dataclass

import g2fun as g
from g2fun import C, S, SL, SS, Weight


@dataclass(frozen=True)
class ReportConfig:
    max_order: int = 12
    census_level: int = 30
    product_box: int = 2

    def __post_init__(self) -> None:
        if self.max_order < 1 or self.census_level < 1 or self.product_box < 1:
            raise ValueError("all report bounds must be positive")


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


def show_rational_classes(cfg: ReportConfig) -> None:
    banner(f"rational conjugacy classes of order <= {cfg.max_order}")
    for e in g.rational_classes(cfg.max_order):
        kp = e.kac
        print(f"  order {kp.M:>2}  [{kp.s0},{kp.s1},{kp.s2}]")


def show_rational_table() -> None:
    banner("integer values on the rational classes")
    print(g.rational_table().to_csv().strip())


def show_products(cfg: ReportConfig) -> None:
    banner("low product decompositions")
    pairs = [
        (C, Weight(1, 0), C, Weight(1, 0)),
        (C, Weight(0, 1), C, Weight(0, 1)),
        (C, Weight(0, 1), C, Weight(1, 0)),
        (C, Weight(1, 0), SL, Weight(1, 0)),
        (C, Weight(0, 1), SS, Weight(0, 1)),
        (S, Weight(1, 1), S, Weight(1, 1)),
        (SL, Weight(1, 1), SS, Weight(1, 1)),
    ]
    n = cfg.product_box
    pairs += [
        (fam, Weight(n, n), fam, Weight(n, n)) for fam in (C, S, SL, SS)
    ]
    for fa, la, fb, lb in pairs:
        out = g.expand_product(fa, la, fb, lb)
        lhs = f"{fa.tag}({la.a},{la.b}) * {fb.tag}({lb.a},{lb.b})"
        err = g.product_check(fa, la, fb, lb, out, n=10, seed=1)
        print(f"  {lhs:24s} = {out.pretty():60s} (pointwise err {err:.1e})")


def show_character_lines() -> None:
    banner("character expansions over the invariant basis")
    for variant in ("full", "L", "S"):
        for lam in [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (0, 3)]:
            out = g.expand_char_in_C(variant, Weight(*lam))
            name = {"full": "chi", "L": "chiL", "S": "chiS"}[variant]
            print(f"  {name}({lam[0]},{lam[1]})".ljust(14) + f"= {out.pretty()}")


def show_census(cfg: ReportConfig) -> None:
    M = cfg.census_level
    banner(f"grid census at level M={M}")
    grid = g.grid_points(M)
    print(f"  points: {len(grid.points)}   weight mass: {sum(grid.weights)} (= M^2)")
    for fam in (C, S, SL, SS):
        sp = g.spectrum(fam, M)
        print(f"  spectrum size {fam.tag:2s}: {len(sp.entries)}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=12)
    parser.add_argument("--census-level", type=int, default=30)
    parser.add_argument("--product-box", type=int, default=2)
    args = parser.parse_args()
    cfg = ReportConfig(args.max_order, args.census_level, args.product_box)

    show_rational_classes(cfg)
    show_rational_table()
    show_products(cfg)
    show_character_lines()
    show_census(cfg)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
