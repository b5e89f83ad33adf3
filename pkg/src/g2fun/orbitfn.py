"""Numeric evaluation of the four orbit-function families.

For a dominant weight lam and a point x, the family value is the sum of
sign(mu) * exp(2*pi*i*<mu, x>) over the Weyl orbit of lam, with the sign
homomorphism of the family.  C and S values are real; SL and SS values
are purely imaginary, and their real "renormalized" view divides out the
factor i (a modulus-one factor, so all orthogonality constants survive
unchanged).
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .rootsys import (
    C,
    S,
    SL,
    SS,
    Family,
    Point,
    Weight,
    is_admissible,
    signed_orbit,
    weyl_orbit,
)

TWO_PI = 2.0 * math.pi


class FunctionValue(NamedTuple):
    """Full complex value plus the real renormalized view of one evaluation."""

    value: complex
    renormalized: float
    admissible: bool


class SingularPointError(ValueError):
    """Raised when a character ratio is requested where its denominator vanishes."""


@lru_cache(maxsize=None)
def _signed_exponents(family: Family, lam: Weight) -> tuple[tuple[int, int, int], ...]:
    # Simple-root coordinates of each orbit member, paired with its sign.
    return tuple(
        (2 * w.a + w.b, 3 * w.a + 2 * w.b, s) for w, s in signed_orbit(family, lam)
    )


def evaluate(family: Family, lam: Weight, p) -> FunctionValue:
    """Orbit sum of `family` at weight lam and point p.

    Total on dominant weights: an inadmissible weight (on a wall the
    family alternates across) yields exactly zero, flagged through the
    `admissible` field.
    """
    lam = Weight(*lam)
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    terms = _signed_exponents(family, lam)
    if not terms:
        return FunctionValue(0j, 0.0, False)
    x1 = float(p[0])
    x2 = float(p[1])
    val = 0j
    for k1, k2, s in terms:
        val += s * cmath.exp(1j * TWO_PI * (k1 * x1 + k2 * x2))
    ren = val.real if family.real_valued else val.imag
    return FunctionValue(val, ren, True)


def evaluate_real(family: Family, lam: Weight, p) -> float:
    """Renormalized real value: the full value for C and S, value/i for SL and SS."""
    return evaluate(family, lam, p).renormalized


def sample_values(family: Family, lam: Weight, x1, x2) -> np.ndarray:
    """Vectorized renormalized values over arrays of point coordinates."""
    lam = Weight(*lam)
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    total = np.zeros(np.broadcast_shapes(x1.shape, x2.shape), dtype=complex)
    for k1, k2, s in _signed_exponents(family, lam):
        total += s * np.exp(1j * TWO_PI * (k1 * x1 + k2 * x2))
    return total.real if family.real_valued else total.imag


#: Denominator family and weight shift for the three character variants.
CHARACTER_VARIANTS = {
    "full": (S, Weight(1, 1)),
    "L": (SL, Weight(1, 0)),
    "S": (SS, Weight(0, 1)),
}


def character(variant: str, lam: Weight, p, *, denom_tol: float = 1e-12) -> float:
    """Character-like ratio of alternating sums shifted by the variant's vector.

    The ratio of two same-family values is real even for the imaginary
    families, so this returns the renormalized quotient.  Points where
    the denominator is smaller than `denom_tol` in absolute value raise
    SingularPointError; lower the guard explicitly to probe near walls.
    """
    try:
        fam, shift = CHARACTER_VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown character variant {variant!r}") from None
    lam = Weight(*lam)
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    den = evaluate_real(fam, shift, p)
    if abs(den) <= denom_tol:
        raise SingularPointError(f"character denominator vanishes at {tuple(p)}")
    num = evaluate_real(fam, lam + shift, p)
    return num / den


def dimension(lam: Weight) -> int:
    """Dimension of the irreducible representation with highest weight lam."""
    a, b = Weight(*lam)
    if a < 0 or b < 0:
        raise ValueError(f"{Weight(a, b)} is not dominant")
    total = (
        (a + 1)
        * (b + 1)
        * (a + b + 2)
        * (2 * a + b + 3)
        * (3 * a + b + 4)
        * (3 * a + 2 * b + 5)
    )
    assert total % 120 == 0
    return total // 120


#: The three walls of the fundamental domain.
WALLS = ("r1", "r2", "affine")


def boundary_parity(family: Family, wall: str) -> str:
    """Mirror behavior of a family on one wall of the fundamental domain.

    "antisymmetric" means the function vanishes on the wall;
    "symmetric" means its normal derivative does.  The affine wall is a
    mirror conjugate to the long-root one, so it inherits sigma_r1.
    """
    if wall not in WALLS:
        raise ValueError(f"wall must be one of {WALLS}, got {wall!r}")
    sign = {"r1": family.sigma_r1, "r2": family.sigma_r2, "affine": family.sigma_r1}[wall]
    return "antisymmetric" if sign < 0 else "symmetric"


__all__ = [
    "C",
    "S",
    "SL",
    "SS",
    "Family",
    "FunctionValue",
    "SingularPointError",
    "CHARACTER_VARIANTS",
    "WALLS",
    "boundary_parity",
    "character",
    "dimension",
    "evaluate",
    "evaluate_real",
    "sample_values",
    "weyl_orbit",
]
