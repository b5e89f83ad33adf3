"""Discretization lattices: the grid F_M and the dual weight spectra.

The level-M grid collects the points of the fundamental domain whose
coordinates have denominator M, encoded as Kac coordinates [s0, s1, s2]
with s0 + 2*s1 + 3*s2 = M.  Each point carries an integer weight c_s
(the size of its orbit in the periodic torus); each family gets a
spectrum of weights with rational normalization constants h so that
discrete inner products come out as 12 * M^2 * h on the diagonal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .rootsys import C, S, SL, SS, Family, KacPoint, Weight


def c_weight(kp: KacPoint) -> int:
    """Orbit-size weight of a grid point: 12 interior, 6 facet, 1/3/2 at vertices."""
    if kp.s1 == 0 and kp.s2 == 0:
        return 1
    if kp.s0 == 0 and kp.s2 == 0:
        return 3
    if kp.s0 == 0 and kp.s1 == 0:
        return 2
    if kp.s0 == 0 or kp.s1 == 0 or kp.s2 == 0:
        return 6
    return 12


@dataclass(frozen=True)
class Grid:
    M: int
    points: tuple[KacPoint, ...]
    weights: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.points)


@lru_cache(maxsize=None)
def grid_points(M: int) -> Grid:
    """All level-M points of the fundamental domain, (s2, s1)-lexicographic."""
    if M < 1:
        raise ValueError(f"level must be a positive integer, got {M}")
    pts = []
    for s2 in range(M // 3 + 1):
        for s1 in range((M - 3 * s2) // 2 + 1):
            pts.append(KacPoint(M - 2 * s1 - 3 * s2, s1, s2, M))
    return Grid(M, tuple(pts), tuple(c_weight(kp) for kp in pts))


def grid_size(M: int) -> int:
    """Closed-form count of level-M grid points."""
    if M < 1:
        raise ValueError(f"level must be a positive integer, got {M}")
    return M // 3 + 1 + sum((M - 3 * i) // 2 for i in range(M // 3 + 1))


class SpectrumEntry(NamedTuple):
    """One basis label: the weight and its normalization constant h."""

    weight: Weight
    h: Fraction


@dataclass(frozen=True)
class Spectrum:
    family: Family
    M: int
    entries: tuple[SpectrumEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def weights(self) -> tuple[Weight, ...]:
        return tuple(w for w, _ in self.entries)


@lru_cache(maxsize=None)
def spectrum(family: Family, M: int) -> Spectrum:
    """Weights labeling the family's orthogonal basis on the level-M grid.

    Each entry carries the normalization h with squared discrete norm
    12 * M^2 * h.  Weights whose orbit sums vanish identically on the
    grid (wall weights at the extreme level) are excluded.
    """
    if M < 1:
        raise ValueError(f"level must be a positive integer, got {M}")
    entries: list[SpectrumEntry] = []
    if family == C:
        for a in range(M // 3 + 1):
            for b in range((M - 3 * a) // 2 + 1):
                if a == 0 and b == 0:
                    h = Fraction(1, 12)
                elif b == 0:
                    h = Fraction(3, 2) if 3 * a == M else Fraction(1, 2)
                elif a == 0:
                    h = Fraction(1) if 2 * b == M else Fraction(1, 2)
                else:
                    h = Fraction(2) if 3 * a + 2 * b == M else Fraction(1)
                entries.append(SpectrumEntry(Weight(a, b), h))
    elif family == S:
        for a in range(1, M // 3 + 1):
            for b in range(1, (M - 1 - 3 * a) // 2 + 1):
                entries.append(SpectrumEntry(Weight(a, b), Fraction(1)))
    elif family == SL:
        for a in range(1, M // 3 + 1):
            for b in range((M - 3 * a) // 2 + 1):
                if b == 0:
                    h = Fraction(3, 2) if 3 * a == M else Fraction(1, 2)
                else:
                    h = Fraction(2) if 3 * a + 2 * b == M else Fraction(1)
                entries.append(SpectrumEntry(Weight(a, b), h))
    elif family == SS:
        for b in range(1, (M - 1) // 2 + 1):
            entries.append(SpectrumEntry(Weight(0, b), Fraction(1, 2)))
        for a in range(1, M // 3 + 1):
            for b in range(1, (M - 1 - 3 * a) // 2 + 1):
                entries.append(SpectrumEntry(Weight(a, b), Fraction(1)))
    else:
        raise ValueError(f"unknown family {family!r}")
    entries.sort(key=lambda e: e.weight)
    return Spectrum(family, M, tuple(entries))


def grid_to_json(grid: Grid) -> str:
    return json.dumps(
        {
            "M": grid.M,
            "points": [[kp.s0, kp.s1, kp.s2] for kp in grid.points],
            "weights": list(grid.weights),
        }
    )


def grid_from_json(text: str) -> Grid:
    data = json.loads(text)
    M = int(data["M"])
    pts = tuple(KacPoint(s0, s1, s2, M) for s0, s1, s2 in data["points"])
    weights = tuple(int(w) for w in data["weights"])
    for kp in pts:
        if not kp.is_valid:
            raise ValueError(f"invalid grid point {kp}")
    if len(weights) != len(pts):
        raise ValueError("weights and points disagree in length")
    return Grid(M, pts, weights)


__all__ = [
    "Grid",
    "Spectrum",
    "SpectrumEntry",
    "c_weight",
    "grid_from_json",
    "grid_points",
    "grid_size",
    "grid_to_json",
    "spectrum",
]
