"""Discrete and continuous pairings, transforms, and field serialization."""

import math

import numpy as np
import pytest

import g2fun as g
from g2fun import C, S, SL, SS, CoefficientVector, SampledField, Weight

from conftest import ALL_FAMILIES

SQRT3 = math.sqrt(3.0)


# ------------------------------------------------------------ discrete pairing


def test_discrete_inner_of_constants():
    ones = SampledField(2, np.ones(g.grid_size(2)))
    assert g.discrete_inner(ones, ones) == pytest.approx(4.0)


def test_discrete_inner_fixtures():
    f = g.sample_on_grid(C, Weight(1, 0), 6)
    h = g.sample_on_grid(C, Weight(0, 1), 6)
    assert g.discrete_inner(f, h) == pytest.approx(0.0, abs=1e-10)
    s = g.sample_on_grid(S, Weight(1, 1), 6)
    assert g.discrete_inner(s, s) == pytest.approx(432.0)


@pytest.mark.parametrize("M", [2, 3, 6, 7, 12])
def test_discrete_orthogonality_small_levels(M):
    for fam in ALL_FAMILIES:
        B = g.basis_matrix(fam, M)
        if B.shape[0] == 0:
            continue
        w = np.asarray(g.grid_points(M).weights, dtype=float)
        gram = (B * w) @ B.T
        want = np.diag(g.norm_constants(fam, M))
        assert np.allclose(gram, want, atol=1e-9 * M * M)


def test_norm_constants_formula():
    for fam in ALL_FAMILIES:
        sp = g.spectrum(fam, 10)
        want = np.array([12.0 * 100.0 * float(e.h) for e in sp.entries])
        assert np.allclose(g.norm_constants(fam, 10), want)


def test_basis_matrix_rows_are_samples():
    B = g.basis_matrix(SL, 8)
    for row, entry in zip(B, g.spectrum(SL, 8).entries):
        f = g.sample_on_grid(SL, entry.weight, 8)
        assert np.allclose(row, f.values)


# ------------------------------------------------------------ transforms


def test_forward_of_basis_function_is_indicator():
    for fam, lam in [(C, Weight(1, 0)), (SS, Weight(0, 1))]:
        f = g.sample_on_grid(fam, lam, 6)
        d = g.forward(fam, 6, f)
        weights = [tuple(e.weight) for e in g.spectrum(fam, 6).entries]
        want = np.array([1.0 if w == tuple(lam) else 0.0 for w in weights])
        assert np.allclose(d.values, want, atol=1e-12)


@pytest.mark.parametrize("M", [3, 6, 10])
def test_coefficient_roundtrip(M, rng):
    for fam in ALL_FAMILIES:
        n = len(g.spectrum(fam, M).entries)
        if n == 0:
            continue
        coeffs = CoefficientVector(fam, M, rng.standard_normal(n))
        back = g.forward(fam, M, g.inverse(fam, M, coeffs))
        assert np.allclose(back.values, coeffs.values, atol=1e-10)


@pytest.mark.parametrize("M", [6, 10])
def test_field_roundtrip_on_supported_points(M, rng):
    for fam in ALL_FAMILIES:
        mask = g.support_mask(fam, M)
        values = rng.standard_normal(g.grid_size(M)) * mask
        f = SampledField(M, values)
        back = g.inverse(fam, M, g.forward(fam, M, f))
        assert np.allclose(back.values, values, atol=1e-10)


def test_interior_field_roundtrip_alternating():
    rng = np.random.default_rng(7)
    mask = g.support_mask(S, 10)
    values = rng.standard_normal(g.grid_size(10)) * mask
    back = g.inverse(S, 10, g.forward(S, 10, SampledField(10, values)))
    assert np.allclose(back.values, values, atol=1e-10)


def test_parseval_identity(rng):
    M = 12
    for fam in ALL_FAMILIES:
        values = rng.standard_normal(g.grid_size(M)) * g.support_mask(fam, M)
        f = SampledField(M, values)
        d = g.forward(fam, M, f)
        energy = float(g.norm_constants(fam, M) @ (d.values**2))
        assert g.discrete_inner(f, f) == pytest.approx(energy, rel=1e-9)


def test_support_mask_counts_match_spectrum():
    for M in (2, 5, 6, 11, 16):
        for fam in ALL_FAMILIES:
            assert int(g.support_mask(fam, M).sum()) == len(g.spectrum(fam, M).entries)


def test_excluded_weights_vanish_on_grid():
    # weights admissible for the family but outside the level-M spectrum
    # sample to the zero field, so they carry no grid information
    for fam, lam, M in [(S, Weight(1, 1), 5), (SS, Weight(0, 3), 6)]:
        spectrum_weights = {tuple(e.weight) for e in g.spectrum(fam, M).entries}
        assert tuple(lam) not in spectrum_weights
        f = g.sample_on_grid(fam, lam, M)
        assert np.allclose(f.values, 0.0, atol=1e-12)


# ------------------------------------------------------------ continuous pairing


def test_continuous_norms():
    assert g.continuous_inner(C, Weight(0, 0), C, Weight(0, 0)) == pytest.approx(
        SQRT3 / 12.0, abs=1e-8
    )
    assert g.continuous_inner(C, Weight(1, 0), C, Weight(1, 0)) == pytest.approx(
        SQRT3 / 2.0, abs=1e-8
    )
    assert g.continuous_inner(SL, Weight(1, 0), SL, Weight(1, 0)) == pytest.approx(
        SQRT3 / 2.0, abs=1e-8
    )
    assert g.continuous_inner(S, Weight(1, 1), S, Weight(1, 1)) == pytest.approx(
        SQRT3, abs=1e-8
    )


def test_continuous_orthogonality_within_family():
    pairs = [
        (C, Weight(1, 0), Weight(0, 1)),
        (C, Weight(2, 1), Weight(1, 1)),
        (S, Weight(1, 1), Weight(1, 2)),
        (SL, Weight(1, 0), Weight(2, 0)),
        (SS, Weight(0, 1), Weight(1, 1)),
    ]
    for fam, lam, mu in pairs:
        assert g.continuous_inner(fam, lam, fam, mu) == pytest.approx(0.0, abs=1e-8)


def test_quadrature_weights_integrate_constants():
    x1, x2, w = g.transforms._triangle_rule(12)
    assert w.sum() == pytest.approx(1.0 / 12.0)
    assert ((x1 >= 0) & (x2 >= 0) & (2 * x1 + 3 * x2 <= 1 + 1e-12)).all()


def test_quadrature_converges_spectrally():
    # doubling the order shrinks the error at least tenfold until roundoff
    for lam in [Weight(1, 0), Weight(0, 1), Weight(2, 0), Weight(0, 3)]:
        exact = SQRT3 / 2.0
        errs = [
            abs(g.continuous_inner(C, lam, C, lam, order=order) - exact)
            for order in (4, 8, 16, 32)
        ]
        for coarse, fine in zip(errs, errs[1:]):
            if coarse < 1e-12:
                break
            assert fine < coarse / 10.0 or fine < 1e-12


# ------------------------------------------------------------ serialization


def test_field_serialization_roundtrip(rng):
    values = rng.standard_normal(g.grid_size(6))
    f = SampledField(6, values, family=SL)
    via_json = g.field_from_json(g.field_to_json(f))
    assert via_json.M == 6 and via_json.family == SL
    assert np.allclose(via_json.values, values)
    via_csv = g.field_from_csv(g.field_to_csv(f), 6, family=SL)
    assert np.allclose(via_csv.values, values)


def test_coefficient_serialization_roundtrip(rng):
    n = len(g.spectrum(SS, 9).entries)
    d = CoefficientVector(SS, 9, rng.standard_normal(n))
    via_json = g.coefficients_from_json(g.coefficients_to_json(d))
    assert via_json.family == SS and via_json.M == 9
    assert np.allclose(via_json.values, d.values)
    via_csv = g.coefficients_from_csv(g.coefficients_to_csv(d), SS, 9)
    assert np.allclose(via_csv.values, d.values)


def test_csv_has_readable_columns():
    f = g.sample_on_grid(C, Weight(1, 0), 3)
    header = g.field_to_csv(f).splitlines()[0]
    assert header.split(",")[:3] == ["s0", "s1", "s2"]
    d = g.forward(C, 3, f)
    header = g.coefficients_to_csv(d).splitlines()[0]
    assert header.split(",")[:2] == ["a", "b"]


# ------------------------------------------------------------ error paths


def test_shape_validation():
    with pytest.raises(ValueError):
        SampledField(6, np.zeros(3))
    with pytest.raises(ValueError):
        CoefficientVector(C, 6, np.zeros(2))
    f = SampledField(6, np.zeros(g.grid_size(6)))
    with pytest.raises(ValueError):
        g.forward(C, 7, f)
    d = CoefficientVector(C, 6, np.zeros(len(g.spectrum(C, 6).entries)))
    with pytest.raises(ValueError):
        g.inverse(C, 7, d)
