# -*- coding: utf-8 -*-
#
# physics.py - Ising correlations and impenetrable Bose gas density matrices
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

"""Ising spin-spin correlations and impenetrable Bose gas density matrices."""

import logging
import math

from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from fhlab.lab import asymptotics, determinants, ensembles, symbols
from fhlab.lab.determinants import PrecisionContext
from fhlab.lab.errors import DeterminantError, DomainError
from fhlab.lab.sampling import McEstimate, gue_sample, lue_sample, mc_average
from fhlab.lab.specfun import (
    LogValue, gaussian_norm, laguerre_norm, log_barnes_g, wrap_phase)

log = logging.getLogger(__name__)

REGIME_CRITICAL = 'critical'
REGIME_HIGH_T = 'highT'
REGIME_OTHER = 'other'

DIRECTION_DIAGONAL = 'diagonal'
DIRECTION_ROW = 'row'

GEOMETRY_CIRCLE = 'circle'
GEOMETRY_DIRICHLET = 'dirichlet'
GEOMETRY_NEUMANN = 'neumann'
GEOMETRY_MIXED = 'mixed'
GEOMETRY_HARMONIC = 'harmonic'
GEOMETRY_HALF_LINE = 'half-line'
GEOMETRIES = (GEOMETRY_CIRCLE, GEOMETRY_DIRICHLET, GEOMETRY_NEUMANN,
              GEOMETRY_MIXED, GEOMETRY_HARMONIC, GEOMETRY_HALF_LINE)

_PHASE_TOL = 1e-8

# G(3/2)^4
G4_THREE_HALVES = math.exp(4.0 * log_barnes_g(1.5).log_modulus)


@dataclass(frozen=True)
class IsingPoint:
    """Anisotropic square-lattice Ising couplings K1, K2 > 0."""

    K1: float
    K2: float

    def __post_init__(self):
        if self.K1 <= 0 or self.K2 <= 0:
            raise DomainError('couplings must be positive')

    @classmethod
    def from_alphas(cls, alpha1, alpha2):
        """Return the point with the given (alpha1, alpha2), alpha1 > 0."""
        if alpha1 <= 0 or alpha2 <= 0 or alpha1 >= alpha2:
            raise DomainError('need 0 < alpha1 < alpha2')
        return cls(math.atanh(math.sqrt(alpha1 / alpha2)),
                   -0.25 * math.log(alpha1 * alpha2))

    @property
    def alpha1(self):
        return symbols.ising_parameters(self.K1, self.K2)[0]

    @property
    def alpha2(self):
        return symbols.ising_parameters(self.K1, self.K2)[1]

    @property
    def k(self):
        """sinh 2K1 sinh 2K2."""
        return symbols.ising_parameters(self.K1, self.K2)[2]

    @property
    def regime(self):
        alpha1, alpha2, _ = symbols.ising_parameters(self.K1, self.K2)
        if abs(alpha2 - 1.0) < 1e-12:
            return REGIME_CRITICAL
        if symbols.is_high_temperature(alpha1, alpha2):
            return REGIME_HIGH_T
        return REGIME_OTHER


def _ising_alphas(point, direction):
    """Return the (alpha1, alpha2) of the row-symbol form of a direction."""
    if direction == DIRECTION_DIAGONAL:
        return 0.0, 1.0 / point.k
    if direction == DIRECTION_ROW:
        return point.alpha1, point.alpha2
    raise DomainError('unknown direction "%s"' % direction)


def ising_symbol(point, direction):
    """Return the FHSymbol of the diagonal or row correlator."""
    pair = symbols.ising_symbols(point.K1, point.K2)
    if direction == DIRECTION_DIAGONAL:
        return pair.diagonal
    if direction == DIRECTION_ROW:
        return pair.row
    raise DomainError('unknown direction "%s"' % direction)


def ising_correlation_logdet(point, direction, n, ctx=PrecisionContext()):
    """Return the correlator <s_00 s_nn> or <s_00 s_0n> as LogDet."""
    if n < 1:
        raise DomainError('separation n must be >= 1')
    sym = symbols.ising_determinant_symbol(*_ising_alphas(point, direction))
    table = symbols.symbol_fourier(sym, n)
    value = determinants.toeplitz_logdet(table, n, ctx)
    if not value.zero and abs(math.sin(value.phase)) > _PHASE_TOL:
        raise DeterminantError('correlator has phase %g' % value.phase)
    return value


def ising_correlation(point, direction, n, ctx=PrecisionContext()):
    """Return the (real) spin-spin correlation at separation n."""
    value = ising_correlation_logdet(point, direction, n, ctx)
    if value.zero:
        return 0.0
    sign = -1.0 if math.cos(value.phase) < 0 else 1.0
    return sign * math.exp(value.log_modulus)


def ising_prediction(point, direction):
    """Return the leading-order Prediction of a correlator."""
    alpha1, alpha2 = _ising_alphas(point, direction)
    if abs(alpha2 - 1.0) < 1e-12:
        return asymptotics.ising_critical_closed_form(alpha1)
    if symbols.is_high_temperature(alpha1, alpha2):
        return asymptotics.ising_highT_closed_form(alpha1, alpha2)
    return asymptotics.predict_fh(symbols.ising_row_symbol(alpha1, alpha2))


@dataclass(frozen=True)
class DensityMatrixSpec:
    """
    One-body density matrix of N+1 impenetrable bosons.

    For circle and box geometries X, Y are positions over the length L
    (L defaults to N+1, unit density); for the harmonic trap and the
    half line they are scaled by sqrt(2N) and 2 sqrt(N).
    """

    geometry: str
    N: int
    X: float
    Y: float = 0.0
    aprime: float = 1.0
    length: float = None

    def __post_init__(self):
        if self.geometry not in GEOMETRIES:
            raise DomainError('unknown geometry "%s"' % self.geometry)
        if self.N < 1:
            raise DomainError('N must be >= 1')
        if self.length is None:
            object.__setattr__(self, 'length', float(self.N + 1))
        if self.length <= 0:
            raise DomainError('length must be positive')
        if self.geometry == GEOMETRY_CIRCLE:
            if not (0 <= self.X <= 1 and 0 <= self.Y <= 1):
                raise DomainError('circle positions must lie in [0, 1]')
        elif self.geometry == GEOMETRY_HARMONIC:
            if abs(self.X) >= 1 or abs(self.Y) >= 1:
                raise DomainError('harmonic positions must lie in (-1, 1)')
        else:
            if not (0 < self.X < 1 and 0 < self.Y < 1):
                raise DomainError('%s positions must lie in (0, 1)'
                                  % self.geometry)
        if self.geometry == GEOMETRY_HALF_LINE and self.aprime - 0.5 <= -1:
            raise DomainError("need a' - 1/2 > -1")


def lenard_symbol(X):
    """Return |1 + e^{i theta}| |e^{2 pi i X} + e^{i theta}| rotated by pi."""
    phi = wrap_phase(2.0 * math.pi * X)
    if symbols.angular_distance(phi, 0.0) < 1e-12:
        return symbols.FHSymbol(singularities=(
            symbols.Singularity(0.0, 1.0),))
    return symbols.FHSymbol(singularities=(
        symbols.Singularity(0.0, 0.5), symbols.Singularity(phi, 0.5)))


def box_symbol(X, Y):
    """Return |2(cos pi X - cos theta)| |2(cos pi Y - cos theta)|."""
    if abs(X - Y) < 1e-12:
        return symbols.cosine_pair_symbol((math.pi * X,), 1.0)
    return symbols.cosine_pair_symbol((math.pi * X, math.pi * Y), 0.5)


def _box_average(kind, spec, ctx):
    ensemble = ensembles.EnsembleId(kind, spec.N)
    value = ensembles.group_average(ensemble, box_symbol(spec.X, spec.Y), ctx)
    return _real(value)


def _real(value):
    if value.zero:
        return 0.0
    if abs(math.sin(value.phase)) > _PHASE_TOL:
        raise DeterminantError('density matrix average has phase %g'
                               % value.phase)
    sign = -1.0 if math.cos(value.phase) < 0 else 1.0
    return sign * math.exp(value.log_modulus)


def _harmonic_norm_ratio(N):
    """Return G_{N,sqrt(2N)}[1] / G_{N+1,sqrt(2N)}[1]."""
    scale = math.sqrt(2.0 * N)
    return gaussian_norm(N, scale) / gaussian_norm(N + 1, scale)


def _half_line_norm_ratio(N, aprime):
    """Return L~_{N,4N}[1] 2^{-N} / (L~_{N+1,4N}[1] 2^{-N-1})."""
    rate = 4.0 * N
    return LogValue(math.log(2.0)) * laguerre_norm(N, rate, aprime) / \
        laguerre_norm(N + 1, rate, aprime)


def _pair(X, Y):
    if abs(X - Y) < 1e-12:
        return (X,), (2.0,)
    return (X, Y), (1.0, 1.0)


def bose_density_matrix(spec, ctx=PrecisionContext()):
    """
    Return the exact density matrix value for spec.

    Circle and box geometries return rho(x; y) itself; the harmonic trap
    returns sqrt(2N) rho(sqrt(2N) X, sqrt(2N) Y) and the half line
    2 sqrt(N) rho(2 sqrt(N) X, 2 sqrt(N) Y).
    """
    N, X, Y, L = spec.N, spec.X, spec.Y, spec.length
    if spec.geometry == GEOMETRY_CIRCLE:
        value = ensembles.group_average(ensembles.EnsembleId.unitary(N),
                                        lenard_symbol(X - Y), ctx)
        return _real(value) / L
    if spec.geometry == GEOMETRY_DIRICHLET:
        prefactor = 2.0 / L * math.sin(math.pi * X) * math.sin(math.pi * Y)
        return prefactor * _box_average(ensembles.SYMPLECTIC, spec, ctx)
    if spec.geometry == GEOMETRY_NEUMANN:
        return _box_average(ensembles.ORTHOGONAL_PLUS_EVEN, spec, ctx) / \
            (2.0 * L)
    if spec.geometry == GEOMETRY_MIXED:
        prefactor = (2.0 / L * math.sin(0.5 * math.pi * X)
                     * math.sin(0.5 * math.pi * Y))
        return prefactor * _box_average(ensembles.ORTHOGONAL_PLUS_ODD, spec,
                                        ctx)
    points, powers = _pair(X, Y)
    if spec.geometry == GEOMETRY_HARMONIC:
        average = ensembles.gaussian_average(N, math.sqrt(2.0 * N), points,
                                             powers, ctx=ctx)
        value = average / gaussian_norm(N, math.sqrt(2.0 * N)) * \
            _harmonic_norm_ratio(N)
        log_prefactor = math.log(N + 1) - N * (X * X + Y * Y)
        return _real(value * LogValue(log_prefactor))
    squares = tuple(y * y for y in points)
    average = ensembles.laguerre_average(N, 4.0 * N, spec.aprime, squares,
                                         powers, ctx=ctx)
    value = average / laguerre_norm(N, 4.0 * N, spec.aprime) * \
        _half_line_norm_ratio(N, spec.aprime)
    log_prefactor = (math.log(N + 1) - 2.0 * N * (X * X + Y * Y)
                     + spec.aprime * math.log(X * Y))
    return _real(value * LogValue(log_prefactor))


def bose_density_matrix_mc(spec, count, seed):
    """
    Return a McEstimate of the harmonic or half-line density matrix from
    exact GUE or LUE eigenvalue samples.
    """
    N, X, Y = spec.N, spec.X, spec.Y
    if spec.geometry == GEOMETRY_HARMONIC:
        batch = gue_sample(N, count, seed)

        def log_factor(x):
            return np.log(np.abs(x - X)) + np.log(np.abs(x - Y))
        scale = _harmonic_norm_ratio(N) * \
            LogValue(math.log(N + 1) - N * (X * X + Y * Y))
    elif spec.geometry == GEOMETRY_HALF_LINE:
        batch = lue_sample(N, spec.aprime, count, seed)

        def log_factor(u):
            return np.log(np.abs(u - X * X)) + np.log(np.abs(u - Y * Y))
        scale = _half_line_norm_ratio(N, spec.aprime) * LogValue(
            math.log(N + 1) - 2.0 * N * (X * X + Y * Y)
            + spec.aprime * math.log(X * Y))
    else:
        raise DomainError('Monte Carlo density matrices exist only for the '
                          'harmonic trap and the half line')
    estimate = mc_average(batch, log_factor)
    return McEstimate(estimate.mean * scale, estimate.rel_stderr,
                      estimate.samples)


def unitary_density_product(X, Y, N, length=None):
    """
    Return both sides of

        (1/L^2) sin(pi X) sin(pi Y) <prod_{l<=2N+1} g>_{U(2N+1)}
            = rho^N_{N+2}(x; y) rho^D_{N+1}(x; y)

    with g the box symbol at X, Y.
    """
    L = float(N + 1) if length is None else length
    sym = box_symbol(X, Y)
    unitary = _real(ensembles.group_average(
        ensembles.EnsembleId.unitary(2 * N + 1), sym))
    lhs = math.sin(math.pi * X) * math.sin(math.pi * Y) * unitary / (L * L)
    neumann = bose_density_matrix(DensityMatrixSpec(
        GEOMETRY_NEUMANN, N + 1, X, Y, length=L))
    dirichlet = bose_density_matrix(DensityMatrixSpec(
        GEOMETRY_DIRICHLET, N, X, Y, length=L))
    return lhs, neumann * dirichlet


def lenard_density_asymptotic(X, N, length=None):
    """Return rho0 G(3/2)^4 / sqrt(2 pi) (pi / (N sin pi X))^{1/2}."""
    if not 0 < X < 1:
        raise DomainError('X must lie in (0, 1)')
    L = float(N + 1) if length is None else length
    rho0 = (N + 1) / L
    return (rho0 * G4_THREE_HALVES / math.sqrt(2.0 * math.pi)
            * math.sqrt(math.pi / (N * math.sin(math.pi * X))))


def mixed_density_matrix_asymptotic(X, Y, N, length=None):
    """
    Return rho G(3/2)^4 / sqrt(2N) (U(1-U) V(1-V))^{1/8} / |U - V|^{1/2}
    with U = (1 + cos pi X)/2, V = (1 + cos pi Y)/2.
    """
    if not (0 < X < 1 and 0 < Y < 1) or X == Y:
        raise DomainError('need distinct X, Y in (0, 1)')
    L = float(N + 1) if length is None else length
    rho0 = (N + 1) / L
    u = 0.5 * (1.0 + math.cos(math.pi * X))
    v = 0.5 * (1.0 + math.cos(math.pi * Y))
    return (rho0 * G4_THREE_HALVES / math.sqrt(2.0 * N)
            * (u * (1.0 - u) * v * (1.0 - v)) ** 0.125
            / math.sqrt(abs(u - v)))


def harmonic_density_matrix_asymptotic(X, Y, N):
    """
    Return sqrt(N) G(3/2)^4 / pi (1-X^2)^{1/8} (1-Y^2)^{1/8} / |X-Y|^{1/2},
    the form of sqrt(2N) rho(sqrt(2N) X, sqrt(2N) Y).
    """
    if abs(X) >= 1 or abs(Y) >= 1 or X == Y:
        raise DomainError('need distinct X, Y in (-1, 1)')
    return (math.sqrt(N) * G4_THREE_HALVES / math.pi
            * ((1.0 - X * X) * (1.0 - Y * Y)) ** 0.125
            / math.sqrt(abs(X - Y)))


def lue_density_matrix_asymptotic(X, Y, N):
    """
    Return 2 sqrt(N) G(3/2)^4 / pi (XY)^{1/4} (1-X^2)^{1/8} (1-Y^2)^{1/8}
    / |X^2 - Y^2|^{1/2}, the form of 2 sqrt(N) rho(2 sqrt(N) X, ...).
    """
    if not (0 < X < 1 and 0 < Y < 1):
        raise DomainError('need X, Y in (0, 1)')
    if X == Y:
        raise DomainError('the diagonal X = Y is excluded')
    return (2.0 * math.sqrt(N) * G4_THREE_HALVES / math.pi
            * (X * Y) ** 0.25 * ((1.0 - X * X) * (1.0 - Y * Y)) ** 0.125
            / math.sqrt(abs(X * X - Y * Y)))


def density_matrix_asymptotic(spec):
    """
    Return the leading-order density matrix of spec.  The Dirichlet and
    Neumann boxes have no separate leading form (only their product).
    """
    X, Y, N = spec.X, spec.Y, spec.N
    if spec.geometry == GEOMETRY_CIRCLE:
        return lenard_density_asymptotic(abs(X - Y), N, spec.length)
    if spec.geometry == GEOMETRY_MIXED:
        return mixed_density_matrix_asymptotic(X, Y, N, spec.length)
    if spec.geometry == GEOMETRY_HARMONIC:
        return harmonic_density_matrix_asymptotic(X, Y, N)
    if spec.geometry == GEOMETRY_HALF_LINE:
        return lue_density_matrix_asymptotic(X, Y, N)
    raise DomainError('no leading form for the %s geometry' % spec.geometry)


def occupation_scale(N):
    """Return sqrt(N) G(3/2)^4 / pi, the factor between lambda_j and its
    scaled value."""
    if N < 1:
        raise DomainError('N must be >= 1')
    return math.sqrt(N) * G4_THREE_HALVES / math.pi


def lambda0_asymptotic_constant():
    """
    Return lim lambda0 / sqrt(N) at unit density,
    G(3/2)^4 Gamma(1/4) / (sqrt(2 pi) Gamma(3/4)).
    """
    return (G4_THREE_HALVES * special.gamma(0.25)
            / (math.sqrt(2.0 * math.pi) * special.gamma(0.75)))


def bose_lambda0(geometry, N, exact=True, length=None):
    """
    Return the zero-momentum occupation L int_0^1 rho(LX; 0) dX on the
    circle, from the exact (Toeplitz) or the asymptotic density matrix.
    """
    if geometry != GEOMETRY_CIRCLE:
        raise DomainError('lambda0 is the integrated density matrix only '
                          'on the circle')
    if N < 2:
        raise DomainError('N must be >= 2')
    L = float(N + 1) if length is None else length
    if exact:
        def density(X):
            return bose_density_matrix(
                DensityMatrixSpec(geometry, N, X, length=L))
        # rho(X) = rho(1 - X)
        half, error = integrate.quad(density, 0.0, 0.5, epsabs=0.0,
                                     epsrel=1e-8, limit=200)
    else:
        # X = t^2 removes the X^{-1/2} endpoint singularity
        def density(t):
            return 2.0 * t * lenard_density_asymptotic(t * t, N, L)
        half, error = integrate.quad(density, 0.0, math.sqrt(0.5),
                                     epsabs=0.0, epsrel=1e-10, limit=200)
    log.debug('lambda0 N=%d (%s): quadrature error %.3g', N,
              'exact' if exact else 'asymptotic', error)
    return 2.0 * L * half
