#!/usr/bin/env python3
"""Measure orthogonality quality for both pairings.

Continuous: quadrature error of the inner product over the fundamental
domain as the Gauss-Legendre order doubles.  Discrete: worst deviation
of the Gram matrix from its diagonal across grid levels.  Prints one
compact table per pairing.
"""

import argparse
import math
from dataclasses import dataclass

import numpy as np

import g2fun as g
from g2fun import C, S, SL, SS, Weight

FAMILIES = (C, S, SL, SS)
SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class SweepConfig:
    weight_bound: int = 2
    orders: tuple = (5, 10, 20, 40)
    levels: tuple = (2, 3, 4, 6, 10, 12, 16, 30)

    def __post_init__(self) -> None:
        if self.weight_bound < 0:
            raise ValueError("weight bound must be nonnegative")
        if any(o < 2 for o in self.orders):
            raise ValueError("quadrature orders must be at least 2")


def continuous_sweep(cfg: SweepConfig) -> None:
    weights = [
        Weight(a, b)
        for a in range(cfg.weight_bound + 1)
        for b in range(cfg.weight_bound + 1)
    ]
    print("continuous pairing: worst |measured - expected| per quadrature order")
    print(f"{'order':>6} " + " ".join(f"{f.tag:>10}" for f in FAMILIES))
    for order in cfg.orders:
        row = []
        for fam in FAMILIES:
            worst = 0.0
            for i, lam in enumerate(weights):
                for mu in weights[i:]:
                    got = g.continuous_inner(fam, lam, fam, mu, order=order)
                    want = (
                        SQRT3 * len(g.signed_orbit(fam, lam)) / 12.0
                        if lam == mu
                        else 0.0
                    )
                    worst = max(worst, abs(got - want))
            row.append(worst)
        print(f"{order:>6} " + " ".join(f"{v:>10.2e}" for v in row))


def discrete_sweep(cfg: SweepConfig) -> None:
    print()
    print("discrete pairing: worst normalized Gram deviation per level")
    print(f"{'M':>6} " + " ".join(f"{f.tag:>10}" for f in FAMILIES))
    for M in cfg.levels:
        w = np.asarray(g.grid_points(M).weights, dtype=float)
        row = []
        for fam in FAMILIES:
            B = g.basis_matrix(fam, M)
            if B.shape[0] == 0:
                row.append(float("nan"))
                continue
            norms = g.norm_constants(fam, M)
            gram = (B * w) @ B.T
            dev = np.abs(gram - np.diag(norms)) / np.sqrt(np.outer(norms, norms))
            row.append(float(dev.max()))
        print(f"{M:>6} " + " ".join(f"{v:>10.2e}" for v in row))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--weight-bound", type=int, default=2)
    args = parser.parse_args()
    cfg = SweepConfig(weight_bound=args.weight_bound)
    continuous_sweep(cfg)
    discrete_sweep(cfg)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
