# -*- coding: utf-8 -*-
#
# test_physics.py - tests of Ising correlations and Bose gas density matrices
#
# Copyright (C) 2024-2026 The fhlab authors
#
# This file is part of fhlab, a verification laboratory for
# Fisher-Hartwig asymptotics.
#
# fhlab is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 3 of the License, or
# (at your option) any later version.
#
# fhlab is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with fhlab.  If not, see <http://www.gnu.org/licenses/>.
#

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import integrate, special

from fhlab.lab import asymptotics, determinants, physics, symbols
from fhlab.lab.errors import DomainError
from fhlab.lab.physics import DensityMatrixSpec, IsingPoint

CRITICAL = IsingPoint.from_alphas(0.3, 1.0)
HIGH_T = IsingPoint.from_alphas(0.2, 2.0)


def hermite_function_squared(k, x):
    """Square of the normalized k-th Hermite function."""
    log_norm = k * math.log(2.0) + special.gammaln(k + 1) + \
        0.5 * math.log(math.pi)
    return special.eval_hermite(k, x) ** 2 * np.exp(-x * x - log_norm)


def test_ising_point():
    assert CRITICAL.regime == physics.REGIME_CRITICAL
    assert CRITICAL.alpha1 == pytest.approx(0.3)
    assert HIGH_T.regime == physics.REGIME_HIGH_T
    assert HIGH_T.alpha2 == pytest.approx(2.0)
    assert IsingPoint.from_alphas(0.2, 0.8).regime == physics.REGIME_OTHER
    with pytest.raises(DomainError):
        IsingPoint(0.0, 1.0)
    with pytest.raises(DomainError):
        IsingPoint.from_alphas(0.5, 0.3)
    with pytest.raises(DomainError):
        physics.ising_symbol(HIGH_T, 'column')


def test_diagonal_correlation_one_step():
    sym = physics.ising_symbol(HIGH_T, physics.DIRECTION_DIAGONAL)

    def real_part(theta):
        return float(np.real(symbols.evaluate_symbol(sym, theta)))
    a0, _ = integrate.quad(real_part, -math.pi, math.pi, limit=200)
    value = physics.ising_correlation(HIGH_T, physics.DIRECTION_DIAGONAL, 1)
    assert_allclose(value, a0 / (2 * math.pi), rtol=1e-8)


def test_diagonal_correlation_decreases():
    values = [physics.ising_correlation(HIGH_T, physics.DIRECTION_DIAGONAL,
                                        n) for n in range(1, 7)]
    assert all(v > 0 for v in values)
    assert all(b < a for a, b in zip(values, values[1:]))
    with pytest.raises(DomainError):
        physics.ising_correlation(HIGH_T, physics.DIRECTION_ROW, 0)


def test_critical_row_correlation():
    n = 64
    value = physics.ising_correlation(CRITICAL, physics.DIRECTION_ROW, n)
    prediction = asymptotics.ising_critical_closed_form(0.3)
    assert value == pytest.approx(prediction.evaluate(n).value, rel=0.02)


def test_high_temperature_row_correlation():
    n = 64
    value = physics.ising_correlation(HIGH_T, physics.DIRECTION_ROW, n)
    prediction = asymptotics.ising_highT_closed_form(0.2, 2.0)
    assert value == pytest.approx(prediction.evaluate(n).value, rel=0.05)


def test_diagonal_is_row_symbol_at_zero_alpha1():
    row = symbols.ising_row_symbol(0.0, 1.0 / HIGH_T.k)
    for n in range(1, 9):
        table = symbols.symbol_fourier(row, n)
        expected = determinants.toeplitz_logdet(table, n)
        value = physics.ising_correlation_logdet(
            HIGH_T, physics.DIRECTION_DIAGONAL, n)
        assert_allclose(value.log_modulus, expected.log_modulus, rtol=1e-7)


def test_high_temperature_correlation_at_large_separation():
    prediction = asymptotics.ising_highT_closed_form(0.2, 2.0)
    for n in (16, 32, 64):
        value = physics.ising_correlation_logdet(
            HIGH_T, physics.DIRECTION_ROW, n)
        assert math.cos(value.phase) == pytest.approx(1.0)
        assert value.log_modulus == pytest.approx(
            prediction.evaluate(n).log_modulus, abs=0.05)


def test_ising_prediction_regimes():
    row, diagonal = physics.DIRECTION_ROW, physics.DIRECTION_DIAGONAL
    assert physics.ising_prediction(CRITICAL, row).formula == \
        asymptotics.FORMULA_ISING_CRITICAL
    assert physics.ising_prediction(HIGH_T, row).formula == \
        asymptotics.FORMULA_ISING_HIGHT_CLOSED
    assert physics.ising_prediction(HIGH_T, diagonal).formula == \
        asymptotics.FORMULA_ISING_HIGHT_CLOSED
    low_t = IsingPoint.from_alphas(0.3, 0.5)
    assert physics.ising_prediction(low_t, row).formula == \
        asymptotics.FORMULA_FH
    with pytest.raises(DomainError):
        physics.ising_prediction(HIGH_T, 'column')


def test_density_matrix_spec():
    assert DensityMatrixSpec(physics.GEOMETRY_CIRCLE, 4, 0.5).length == 5.0
    with pytest.raises(DomainError):
        DensityMatrixSpec('torus', 4, 0.5)
    with pytest.raises(DomainError):
        DensityMatrixSpec(physics.GEOMETRY_CIRCLE, 0, 0.5)
    with pytest.raises(DomainError):
        DensityMatrixSpec(physics.GEOMETRY_CIRCLE, 4, 1.2)
    with pytest.raises(DomainError):
        DensityMatrixSpec(physics.GEOMETRY_HARMONIC, 4, 1.0)
    with pytest.raises(DomainError):
        DensityMatrixSpec(physics.GEOMETRY_DIRICHLET, 4, 0.0, 0.5)
    with pytest.raises(DomainError):
        DensityMatrixSpec(physics.GEOMETRY_HALF_LINE, 4, 0.5, 0.5,
                          aprime=-0.6)
    with pytest.raises(DomainError):
        DensityMatrixSpec(physics.GEOMETRY_NEUMANN, 4, 0.5, 0.5, length=0.0)


@pytest.mark.parametrize('X', [0.0, 0.3])
def test_circle_diagonal_is_density(X):
    spec = DensityMatrixSpec(physics.GEOMETRY_CIRCLE, 8, X, X)
    assert physics.bose_density_matrix(spec) == pytest.approx(1.0, abs=1e-6)


def test_circle_depends_on_difference():
    first = DensityMatrixSpec(physics.GEOMETRY_CIRCLE, 5, 0.6, 0.2)
    second = DensityMatrixSpec(physics.GEOMETRY_CIRCLE, 5, 0.4, 0.0)
    assert_allclose(physics.bose_density_matrix(first),
                    physics.bose_density_matrix(second), rtol=1e-10)


def test_box_diagonals_are_fermion_densities():
    N, X = 3, 0.3
    L = N + 1.0
    k = np.arange(1, N + 2)
    dirichlet = 2 / L * np.sum(np.sin(k * math.pi * X) ** 2)
    neumann = 1 / L + 2 / L * np.sum(np.cos(k[:-1] * math.pi * X) ** 2)
    mixed = 2 / L * np.sum(np.sin((k - 0.5) * math.pi * X) ** 2)
    expected = {physics.GEOMETRY_DIRICHLET: dirichlet,
                physics.GEOMETRY_NEUMANN: neumann,
                physics.GEOMETRY_MIXED: mixed}
    for geometry, value in expected.items():
        spec = DensityMatrixSpec(geometry, N, X, X)
        assert_allclose(physics.bose_density_matrix(spec), value,
                        rtol=1e-8)


def test_harmonic_diagonal_is_fermion_density():
    N, X = 3, 0.3
    scale = math.sqrt(2.0 * N)
    density = sum(hermite_function_squared(k, scale * X)
                  for k in range(N + 1))
    spec = DensityMatrixSpec(physics.GEOMETRY_HARMONIC, N, X, X)
    assert_allclose(physics.bose_density_matrix(spec), scale * density,
                    rtol=1e-8)


def test_half_line_diagonal_is_odd_fermion_density():
    # a' = 1 is the hard wall: odd oscillator states on x > 0
    N, X = 3, 0.4
    scale = 2.0 * math.sqrt(N)
    density = 2.0 * sum(hermite_function_squared(2 * k + 1, scale * X)
                        for k in range(N + 1))
    spec = DensityMatrixSpec(physics.GEOMETRY_HALF_LINE, N, X, X, aprime=1.0)
    assert_allclose(physics.bose_density_matrix(spec), scale * density,
                    rtol=1e-8)


@pytest.mark.parametrize('geometry, X, Y', [
    (physics.GEOMETRY_DIRICHLET, 0.3, 0.65),
    (physics.GEOMETRY_MIXED, 0.2, 0.5),
    (physics.GEOMETRY_HARMONIC, 0.2, -0.4),
    (physics.GEOMETRY_HALF_LINE, 0.3, 0.6),
])
def test_density_matrix_symmetric(geometry, X, Y):
    first = physics.bose_density_matrix(DensityMatrixSpec(geometry, 4, X, Y))
    second = physics.bose_density_matrix(DensityMatrixSpec(geometry, 4, Y, X))
    assert_allclose(first, second, rtol=1e-9)
    assert first > 0


def test_unitary_density_product():
    lhs, rhs = physics.unitary_density_product(0.3, 0.7, 2)
    assert_allclose(lhs, rhs, rtol=1e-8)


def test_lenard_density_asymptotic():
    N, X = 128, 0.3
    exact = physics.bose_density_matrix(
        DensityMatrixSpec(physics.GEOMETRY_CIRCLE, N, X))
    assert exact == pytest.approx(physics.lenard_density_asymptotic(X, N),
                                  rel=0.03)
    with pytest.raises(DomainError):
        physics.lenard_density_asymptotic(0.0, N)


def test_mixed_density_asymptotic():
    N, X, Y = 64, 0.35, 0.65
    exact = physics.bose_density_matrix(
        DensityMatrixSpec(physics.GEOMETRY_MIXED, N, X, Y))
    expected = physics.mixed_density_matrix_asymptotic(X, Y, N)
    assert exact == pytest.approx(expected, rel=0.05)
    with pytest.raises(DomainError):
        physics.mixed_density_matrix_asymptotic(0.4, 0.4, N)


def test_hermitian_density_asymptotics():
    assert physics.harmonic_density_matrix_asymptotic(0.2, -0.4, 10) == \
        pytest.approx(physics.harmonic_density_matrix_asymptotic(-0.4, 0.2,
                                                                 10))
    assert physics.lue_density_matrix_asymptotic(0.3, 0.6, 50) == \
        pytest.approx(physics.lue_density_matrix_asymptotic(0.6, 0.3, 50))
    with pytest.raises(DomainError):
        physics.harmonic_density_matrix_asymptotic(0.2, 0.2, 10)
    with pytest.raises(DomainError):
        physics.lue_density_matrix_asymptotic(0.3, 0.3, 50)


def test_density_matrix_asymptotic_by_geometry():
    circle = DensityMatrixSpec(physics.GEOMETRY_CIRCLE, 64, 0.6, 0.3)
    assert physics.density_matrix_asymptotic(circle) == \
        pytest.approx(physics.lenard_density_asymptotic(0.3, 64))
    mixed = DensityMatrixSpec(physics.GEOMETRY_MIXED, 64, 0.35, 0.65)
    assert physics.density_matrix_asymptotic(mixed) == \
        pytest.approx(physics.mixed_density_matrix_asymptotic(0.35, 0.65,
                                                              64))
    harmonic = DensityMatrixSpec(physics.GEOMETRY_HARMONIC, 10, 0.2, -0.4)
    assert physics.density_matrix_asymptotic(harmonic) == \
        pytest.approx(physics.harmonic_density_matrix_asymptotic(0.2, -0.4,
                                                                 10))
    with pytest.raises(DomainError):
        physics.density_matrix_asymptotic(
            DensityMatrixSpec(physics.GEOMETRY_DIRICHLET, 8, 0.3, 0.6))


def test_occupation_scale():
    assert physics.occupation_scale(4) == \
        pytest.approx(2.0 * physics.G4_THREE_HALVES / math.pi)
    with pytest.raises(DomainError):
        physics.occupation_scale(0)


def test_lambda0_asymptotic_scaling():
    N = 32
    small = physics.bose_lambda0(physics.GEOMETRY_CIRCLE, N, exact=False)
    large = physics.bose_lambda0(physics.GEOMETRY_CIRCLE, 2 * N, exact=False)
    assert large / small == pytest.approx(math.sqrt(2.0), rel=0.05)
    limit = physics.lambda0_asymptotic_constant()
    assert small == pytest.approx(limit * (N + 1) / math.sqrt(N), rel=1e-7)
    with pytest.raises(DomainError):
        physics.bose_lambda0(physics.GEOMETRY_HARMONIC, N)
    with pytest.raises(DomainError):
        physics.bose_lambda0(physics.GEOMETRY_CIRCLE, 1)


def test_lambda0_exact_matches_trapezoid():
    N = 4
    grid = np.arange(64) / 64.0
    values = [physics.bose_density_matrix(
        DensityMatrixSpec(physics.GEOMETRY_CIRCLE, N, X)) for X in grid]
    # periodic and smooth in X
    trapezoid = (N + 1) * np.mean(values)
    exact = physics.bose_lambda0(physics.GEOMETRY_CIRCLE, N)
    assert exact == pytest.approx(trapezoid, rel=1e-6)
    assert 1.0 < exact < N + 1


def test_density_mc_needs_hermitian_geometry():
    spec = DensityMatrixSpec(physics.GEOMETRY_CIRCLE, 4, 0.5)
    with pytest.raises(DomainError):
        physics.bose_density_matrix_mc(spec, 100, seed=1)


@pytest.mark.slow
def test_harmonic_density_mc():
    spec = DensityMatrixSpec(physics.GEOMETRY_HARMONIC, 3, 0.2, -0.3)
    estimate = physics.bose_density_matrix_mc(spec, 40000, seed=7)
    exact = physics.bose_density_matrix(spec)
    ratio = estimate.mean.value / exact
    assert abs(ratio - 1.0) <= 4 * estimate.rel_stderr + 1e-3
