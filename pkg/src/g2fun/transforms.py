"""Discrete and continuous inner products and the lattice Fourier pair.

Everything operates on the real renormalized basis functions, so fields
and coefficient vectors are plain real arrays for all four families.
Forward/inverse transforms are matrix-free on top of a cached sampled
basis per (family, level).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .lattice import Grid, grid_points, spectrum
from .orbitfn import sample_values
from .rootsys import C, Family, S, SL, SS, Weight

_FAMILY_BY_TAG = {f.tag: f for f in (C, S, SL, SS)}

SQRT3 = math.sqrt(3.0)


@dataclass
class SampledField:
    """Values of a function on the level-M grid, in grid enumeration order."""

    M: int
    values: np.ndarray
    family: Optional[Family] = None

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=float)
        if len(self.values) != len(grid_points(self.M)):
            raise ValueError(
                f"expected {len(grid_points(self.M))} values for level {self.M}, "
                f"got {len(self.values)}"
            )


@dataclass
class CoefficientVector:
    """Expansion coefficients indexed by the family's level-M spectrum."""

    family: Family
    M: int
    values: np.ndarray

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=float)
        if len(self.values) != len(spectrum(self.family, self.M)):
            raise ValueError(
                f"expected {len(spectrum(self.family, self.M))} coefficients "
                f"for {self.family} at level {self.M}, got {len(self.values)}"
            )


@lru_cache(maxsize=None)
def _grid_arrays(M: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    grid = grid_points(M)
    x1 = np.array([kp.s1 / M for kp in grid.points])
    x2 = np.array([kp.s2 / M for kp in grid.points])
    w = np.array(grid.weights, dtype=float)
    for arr in (x1, x2, w):
        arr.flags.writeable = False
    return x1, x2, w


def sample_on_grid(family: Family, lam: Weight, M: int) -> SampledField:
    """Renormalized values of one basis function on the level-M grid."""
    x1, x2, _ = _grid_arrays(M)
    return SampledField(M, sample_values(family, lam, x1, x2), family)


@lru_cache(maxsize=None)
def basis_matrix(family: Family, M: int) -> np.ndarray:
    """Sampled basis, one row per spectrum weight, one column per grid point."""
    x1, x2, _ = _grid_arrays(M)
    sp = spectrum(family, M)
    mat = np.zeros((len(sp), len(x1)))
    for i, (lam, _) in enumerate(sp.entries):
        mat[i] = sample_values(family, lam, x1, x2)
    mat.flags.writeable = False
    return mat


def discrete_inner(f: SampledField, g: SampledField) -> float:
    """Weighted sum over the grid of f * g with the orbit-size weights c_s."""
    if f.M != g.M:
        raise ValueError(f"grid mismatch: levels {f.M} and {g.M}")
    _, _, w = _grid_arrays(f.M)
    return float(np.dot(w, f.values * g.values))


def norm_constants(family: Family, M: int) -> np.ndarray:
    """Squared discrete norms 12 * M^2 * h of the spectrum entries."""
    sp = spectrum(family, M)
    return np.array([12.0 * M * M * float(h) for _, h in sp.entries])


def forward(family: Family, M: int, f: SampledField) -> CoefficientVector:
    """Analysis: project a sampled field onto the family's discrete basis."""
    if f.M != M:
        raise ValueError(f"field is sampled at level {f.M}, not {M}")
    _, _, w = _grid_arrays(M)
    coeffs = basis_matrix(family, M) @ (w * f.values)
    return CoefficientVector(family, M, coeffs / norm_constants(family, M))


def inverse(family: Family, M: int, d: CoefficientVector) -> SampledField:
    """Synthesis: rebuild grid values from spectrum coefficients."""
    if d.family != family or d.M != M:
        raise ValueError(f"coefficients belong to {d.family} at level {d.M}")
    if len(d.values) == 0:
        return SampledField(M, np.zeros(len(grid_points(M))), family)
    return SampledField(M, d.values @ basis_matrix(family, M), family)


def support_mask(family: Family, M: int) -> np.ndarray:
    """Grid points where the family's basis does not vanish identically.

    The antisymmetric walls of each family zero out the corresponding
    border points; on the remaining points the sampled basis is square
    and invertible.
    """
    grid = grid_points(M)
    if family == C:
        keep = [True] * len(grid)
    elif family == S:
        keep = [kp.s0 > 0 and kp.s1 > 0 and kp.s2 > 0 for kp in grid.points]
    elif family == SL:
        keep = [kp.s0 > 0 and kp.s1 > 0 for kp in grid.points]
    elif family == SS:
        keep = [kp.s2 > 0 for kp in grid.points]
    else:
        raise ValueError(f"unknown family {family!r}")
    return np.array(keep)


@lru_cache(maxsize=None)
def _triangle_rule(order: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # Tensor Gauss-Legendre rule mapped onto the fundamental triangle:
    # outer coordinate x1 in [0, 1/2], inner x2 in [0, (1 - 2*x1)/3].
    if order < 1:
        raise ValueError(f"quadrature order must be positive, got {order}")
    t, w = np.polynomial.legendre.leggauss(order)
    u = (t + 1.0) / 2.0
    x1 = u / 2.0
    span = (1.0 - 2.0 * x1) / 3.0
    x1g = np.repeat(x1, order)
    x2g = (np.outer(span, u)).ravel()
    wg = (np.outer(w * span, w)).ravel() / 8.0
    for arr in (x1g, x2g, wg):
        arr.flags.writeable = False
    return x1g, x2g, wg


def continuous_inner(
    fam_a: Family,
    lam_a: Weight,
    fam_b: Family,
    lam_b: Weight,
    *,
    order: int = 40,
) -> float:
    """Quadrature for sqrt(3) * integral over F of the two renormalized values.

    For two functions of the same family this approximates the exact
    orthogonality constants (sqrt(3)/12, sqrt(3)/2, sqrt(3), or 0).
    """
    x1, x2, w = _triangle_rule(order)
    fa = sample_values(fam_a, lam_a, x1, x2)
    fb = sample_values(fam_b, lam_b, x1, x2)
    return SQRT3 * float(np.dot(w, fa * fb))


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def field_to_json(f: SampledField) -> str:
    tag = None if f.family is None else f.family.tag
    return json.dumps(
        {"M": f.M, "family": tag, "values": [float(v) for v in f.values]}
    )


def field_from_json(text: str) -> SampledField:
    data = json.loads(text)
    tag = data.get("family")
    family = None if tag is None else _FAMILY_BY_TAG[tag]
    return SampledField(int(data["M"]), data["values"], family)


def coefficients_to_json(d: CoefficientVector) -> str:
    return json.dumps(
        {"M": d.M, "family": d.family.tag, "values": [float(v) for v in d.values]}
    )


def coefficients_from_json(text: str) -> CoefficientVector:
    data = json.loads(text)
    return CoefficientVector(
        _FAMILY_BY_TAG[data["family"]], int(data["M"]), data["values"]
    )


def field_to_csv(f: SampledField) -> str:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["s0", "s1", "s2", "x1", "x2", "value"])
    grid = grid_points(f.M)
    for kp, v in zip(grid.points, f.values):
        writer.writerow([kp.s0, kp.s1, kp.s2, _fmt(kp.s1 / f.M), _fmt(kp.s2 / f.M), _fmt(v)])
    return out.getvalue()


def field_from_csv(text: str, M: int, family: Optional[Family] = None) -> SampledField:
    rows = list(csv.DictReader(io.StringIO(text)))
    grid = grid_points(M)
    by_kac = {(kp.s0, kp.s1, kp.s2): i for i, kp in enumerate(grid.points)}
    values = np.zeros(len(grid))
    seen = 0
    for row in rows:
        key = (int(row["s0"]), int(row["s1"]), int(row["s2"]))
        if key not in by_kac:
            raise ValueError(f"row {key} is not a level-{M} grid point")
        values[by_kac[key]] = float(row["value"])
        seen += 1
    if seen != len(grid):
        raise ValueError(f"expected {len(grid)} rows, got {seen}")
    return SampledField(M, values, family)


def coefficients_to_csv(d: CoefficientVector) -> str:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["a", "b", "h", "value"])
    for (lam, h), v in zip(spectrum(d.family, d.M).entries, d.values):
        writer.writerow([lam.a, lam.b, str(h), _fmt(v)])
    return out.getvalue()


def coefficients_from_csv(text: str, family: Family, M: int) -> CoefficientVector:
    rows = list(csv.DictReader(io.StringIO(text)))
    sp = spectrum(family, M)
    index = {w: i for i, w in enumerate(sp.weights())}
    values = np.zeros(len(sp))
    seen = 0
    for row in rows:
        lam = Weight(int(row["a"]), int(row["b"]))
        if lam not in index:
            raise ValueError(f"{lam} is not in the {family} spectrum at level {M}")
        values[index[lam]] = float(row["value"])
        seen += 1
    if seen != len(sp):
        raise ValueError(f"expected {len(sp)} rows, got {seen}")
    return CoefficientVector(family, M, values)


__all__ = [
    "CoefficientVector",
    "SampledField",
    "basis_matrix",
    "coefficients_from_csv",
    "coefficients_from_json",
    "coefficients_to_csv",
    "coefficients_to_json",
    "continuous_inner",
    "discrete_inner",
    "field_from_csv",
    "field_from_json",
    "field_to_csv",
    "field_to_json",
    "forward",
    "inverse",
    "norm_constants",
    "sample_on_grid",
    "support_mask",
]
