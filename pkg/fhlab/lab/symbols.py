# -*- coding: utf-8 -*-
#
# symbols.py - Fisher-Hartwig symbols and their Fourier coefficients
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

"""
Symbols of Toeplitz matrices.

A symbol is a smooth factor a(theta) = exp(sum c_p e^{ip theta}) times
Fisher-Hartwig factors

    (1 + e^{i(theta - theta_r - pi)})^{a_r + b_r}
    (1 + e^{i(theta_r + pi - theta)})^{a_r - b_r}
      = |2 - 2 cos(theta - theta_r)|^{a_r} e^{i b_r arg(...)}

with principal branches.
"""

import logging
import math

from dataclasses import dataclass, field

import numpy as np
from scipy import signal, special

from fhlab.lab.errors import DomainError, SymbolError

log = logging.getLogger(__name__)

DEFAULT_GRID_FACTOR = 8
DEFAULT_SINGULAR_TABLE = 32768
DEFAULT_MIN_SEPARATION = 0.05

# smallest DFT grid used to expand exp(log a)
_MIN_GRID = 512


def _freeze(array, dtype=complex):
    array = np.array(array, dtype=dtype)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class FourierSeries:
    """Two-sided coefficients c_p, |p| <= P, of the log of a smooth symbol."""

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = _freeze(self.coeffs)
        if coeffs.ndim != 1 or len(coeffs) % 2 == 0:
            raise SymbolError('coefficient array must have odd length')
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def zeros(cls, order=0):
        """Return the series of log a = 0."""
        return cls(np.zeros(2 * order + 1, dtype=complex))

    @classmethod
    def from_terms(cls, terms):
        """Return a series from a {p: c_p} mapping."""
        order = max([abs(int(p)) for p in terms] or [0])
        coeffs = np.zeros(2 * order + 1, dtype=complex)
        for p, value in terms.items():
            coeffs[int(p) + order] += value
        return cls(coeffs)

    @property
    def order(self):
        """Truncation order P."""
        return (len(self.coeffs) - 1) // 2

    @property
    def c0(self):
        """Zeroth coefficient (mean of log a)."""
        return self.coeffs[self.order]

    def __getitem__(self, p):
        if abs(p) > self.order:
            return 0j
        return self.coeffs[p + self.order]

    def padded(self, order):
        """Return coefficients zero-padded to a larger order."""
        if order < self.order:
            raise SymbolError('cannot pad to a smaller order')
        extra = order - self.order
        return np.pad(self.coeffs, (extra, extra))

    def __add__(self, other):
        order = max(self.order, other.order)
        return FourierSeries(self.padded(order) + other.padded(order))

    def __sub__(self, other):
        return self + other.scaled(-1.0)

    def scaled(self, factor):
        """Return factor * log a."""
        return FourierSeries(self.coeffs * factor)

    def is_zero(self):
        """Return True if every coefficient vanishes."""
        return not np.any(self.coeffs)

    def is_even(self, tol=1e-13):
        """Return True if c_p = c_{-p}."""
        return bool(np.allclose(self.coeffs, self.coeffs[::-1],
                                rtol=0.0, atol=tol))

    def positive(self):
        """Return (c_1, ..., c_P)."""
        return self.coeffs[self.order + 1:]

    def negative(self):
        """Return (c_{-1}, ..., c_{-P})."""
        return self.coeffs[self.order - 1::-1] if self.order else \
            np.zeros(0, dtype=complex)

    def evaluate(self, theta):
        """Return log a(theta) for scalar or array theta."""
        theta = np.asarray(theta, dtype=float)
        p = np.arange(-self.order, self.order + 1)
        values = np.exp(1j * np.multiply.outer(theta, p)) @ self.coeffs
        return values


@dataclass(frozen=True)
class Singularity:
    """Fisher-Hartwig singularity at theta with strengths a (zero) and b."""

    theta: float
    a: float
    b: float = 0.0

    def __post_init__(self):
        if not -math.pi <= self.theta <= math.pi:
            raise SymbolError('singularity angle %g outside [-pi, pi]'
                              % self.theta)


def angular_distance(theta1, theta2):
    """Return the distance of two angles on the circle."""
    return abs(math.remainder(theta1 - theta2, 2.0 * math.pi))


@dataclass(frozen=True, eq=False)
class FHSymbol:
    """Smooth part plus a list of Fisher-Hartwig singularities."""

    smooth_log: FourierSeries = field(default_factory=FourierSeries.zeros)
    singularities: tuple = ()

    def __post_init__(self):
        singularities = tuple(self.singularities)
        object.__setattr__(self, 'singularities', singularities)
        for i, first in enumerate(singularities):
            for second in singularities[i + 1:]:
                distance = angular_distance(first.theta, second.theta)
                if distance < 1e-12:
                    raise SymbolError('two singularities at angle %g'
                                      % first.theta)
                if distance < DEFAULT_MIN_SEPARATION:
                    log.warning('singularities at %g and %g are only %g '
                                'apart', first.theta, second.theta, distance)

    @property
    def c0(self):
        """Zeroth log coefficient."""
        return self.smooth_log.c0

    def is_even(self, tol=1e-12):
        """Return True if g(theta) = g(-theta)."""
        if not self.smooth_log.is_even(tol):
            return False
        for sing in self.singularities:
            if sing.b != 0:
                return False
            if angular_distance(sing.theta, 0.0) < tol or \
                    angular_distance(sing.theta, math.pi) < tol:
                continue
            partner = [s for s in self.singularities
                       if angular_distance(s.theta, -sing.theta) < tol]
            if not partner or abs(partner[0].a - sing.a) > tol:
                return False
        return True


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    """Fourier coefficients g_k, |k| <= K, of a full symbol."""

    values: np.ndarray
    tail: float = 0.0

    def __post_init__(self):
        values = _freeze(self.values)
        if values.ndim != 1 or len(values) % 2 == 0:
            raise SymbolError('coefficient table must have odd length')
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_terms(cls, terms, order=None):
        """Return a table from a {k: g_k} mapping."""
        needed = max([abs(int(k)) for k in terms] or [0])
        order = needed if order is None else max(order, needed)
        values = np.zeros(2 * order + 1, dtype=complex)
        for k, value in terms.items():
            values[int(k) + order] = value
        return cls(values)

    @property
    def order(self):
        """Largest |k| stored."""
        return (len(self.values) - 1) // 2

    def __getitem__(self, k):
        if np.isscalar(k):
            if abs(k) > self.order:
                return 0j
            return self.values[k + self.order]
        k = np.asarray(k)
        inside = np.abs(k) <= self.order
        result = np.zeros(k.shape, dtype=complex)
        result[inside] = self.values[k[inside] + self.order]
        return result

    def is_even(self, tol=1e-12):
        """Return True if g_k = g_{-k} up to tol (relative to max |g|)."""
        scale = max(float(np.max(np.abs(self.values))), 1e-300)
        return bool(np.max(np.abs(self.values - self.values[::-1]))
                    <= tol * scale)

    def is_real(self, tol=1e-12):
        """Return True if every g_k is real."""
        scale = max(float(np.max(np.abs(self.values))), 1e-300)
        return bool(np.max(np.abs(self.values.imag)) <= tol * scale)


def _grid_size(order, grid_factor):
    size = max(grid_factor * max(order, 1), _MIN_GRID)
    return 1 << (size - 1).bit_length()


def smooth_log_coeffs(log_a, order, grid_factor=4):
    """
    Return the FourierSeries of a smooth 2pi-periodic log a(theta).

    log_a is sampled on a grid of grid_factor * order points; coefficients
    are truncated to |p| <= order.
    """
    if order < 1 or order & (order - 1):
        raise DomainError('truncation order must be a power of two')
    size = grid_factor * order
    theta = 2.0 * math.pi * np.arange(size) / size
    samples = np.asarray(log_a(theta), dtype=complex)
    if samples.shape != theta.shape:
        samples = np.array([complex(log_a(t)) for t in theta])
    if not np.all(np.isfinite(samples)):
        raise SymbolError('non-finite samples of log a')
    spectrum = np.fft.fft(samples) / size
    p = np.arange(-order, order + 1)
    return FourierSeries(spectrum[p % size])


def szego_sum(series):
    """Return sum_{k>=1} k c_k c_{-k}."""
    k = np.arange(1, series.order + 1)
    return complex(np.sum(k * series.positive() * series.negative()))


def szego_condition(series):
    """Return sum_p |p| |c_p c_{-p}|."""
    k = np.arange(1, series.order + 1)
    return 2.0 * float(np.sum(k * np.abs(series.positive()
                                         * series.negative())))


def szego_tail(series):
    """Return the share of the Szego sum carried by the upper half of p."""
    k = np.arange(1, series.order + 1)
    terms = k * np.abs(series.positive() * series.negative())
    return float(np.sum(terms[series.order // 2:]))


def wiener_hopf_split(series, theta):
    """Return (log a_+(theta), log a_-(theta))."""
    k = np.arange(1, series.order + 1)
    phase = np.exp(1j * k * theta)
    plus = complex(np.sum(series.positive() * phase))
    minus = complex(np.sum(series.negative() / phase))
    return plus, minus


def evaluate_symbol(sym, theta):
    """Return the symbol value g(theta) (scalar or array theta)."""
    theta = np.asarray(theta, dtype=float)
    value = np.exp(sym.smooth_log.evaluate(theta))
    for sing in sym.singularities:
        modulus = np.abs(2.0 - 2.0 * np.cos(theta - sing.theta))
        value = value * modulus ** sing.a
        if sing.b:
            psi = np.angle(np.exp(1j * (theta - sing.theta - math.pi)))
            value = value * np.exp(1j * sing.b * psi)
    return value


def _pole_mask(x):
    return (x <= 0) & (x == np.round(x))


def singular_factor_coeffs(sing, order):
    """
    Return the coefficients of one Fisher-Hartwig factor, |k| <= order.

    (1+z)^alpha (1+1/z)^gamma with z = e^{i(theta - theta_r - pi)} has
    z^k coefficient Gamma(alpha+gamma+1)/(Gamma(gamma+k+1)Gamma(alpha-k+1)).
    """
    if sing.a <= -0.5:
        raise DomainError('singularity strength a=%g <= -1/2' % sing.a)
    alpha = sing.a + sing.b
    gamma = sing.a - sing.b
    k = np.arange(-order, order + 1)
    first = gamma + k + 1.0
    second = alpha - k + 1.0
    vanishing = _pole_mask(first) | _pole_mask(second)
    first = np.where(vanishing, 1.0, first)
    second = np.where(vanishing, 1.0, second)
    log_modulus = (special.gammaln(2.0 * sing.a + 1.0)
                   - special.gammaln(first) - special.gammaln(second))
    sign = (special.gammasgn(2.0 * sing.a + 1.0) * special.gammasgn(first)
            * special.gammasgn(second))
    values = np.where(vanishing, 0.0, sign * np.exp(log_modulus))
    return values * np.exp(-1j * k * (sing.theta + math.pi))


def smooth_factor_coeffs(series, grid_factor=DEFAULT_GRID_FACTOR):
    """Return coefficients of a(theta) = exp(log a) and their order."""
    if series.is_zero():
        return np.ones(1, dtype=complex), 0
    size = _grid_size(series.order, grid_factor)
    theta = 2.0 * math.pi * np.arange(size) / size
    spectrum = np.fft.fft(np.exp(series.evaluate(theta))) / size
    order = size // 2 - 1
    k = np.arange(-order, order + 1)
    return spectrum[k % size], order


def _crop(values, order):
    center = (len(values) - 1) // 2
    if order >= center:
        return values
    return values[center - order:center + order + 1]


def symbol_fourier(sym, order, table_size=DEFAULT_SINGULAR_TABLE,
                   grid_factor=DEFAULT_GRID_FACTOR):
    """Return the CoefficientTable of the full symbol, |k| <= order."""
    smooth, smooth_order = smooth_factor_coeffs(sym.smooth_log, grid_factor)
    singular_order = max(table_size, order + smooth_order + 1)
    values = np.ones(1, dtype=complex)
    for sing in sym.singularities:
        factor = singular_factor_coeffs(sing, singular_order)
        if len(values) == 1:
            values = factor * values[0]
        else:
            values = _crop(signal.fftconvolve(values, factor),
                           singular_order)
    if len(smooth) > 1:
        if len(values) == 1:
            values = smooth * values[0]
        else:
            values = _crop(np.convolve(values, smooth), singular_order)
    values = _crop(values, order)
    center = (len(values) - 1) // 2
    if center < order:
        values = np.pad(values, (order - center, order - center))
    tail = float(np.max(np.abs(values[:max(1, order // 4)]))) \
        if order else 0.0
    log.debug('symbol table to |k| <= %d, tail %.3g', order, tail)
    return CoefficientTable(values, tail=tail)


def log1p_series(x, sign=1, order=None):
    """
    Return the series of log(1 + x e^{i sign theta}), |x| < 1.

    The order is the smallest power of two making |x|^P negligible.
    """
    if abs(x) >= 1.0:
        raise DomainError('log(1 + x e^{i theta}) needs |x| < 1')
    if order is None:
        order = 16
        if x != 0:
            while abs(x) ** order > 1e-20 and order < 4096:
                order *= 2
    coeffs = np.zeros(2 * order + 1, dtype=complex)
    if x != 0:
        p = np.arange(1, order + 1)
        terms = (-1.0) ** (p + 1) * float(x) ** p / p
        if sign > 0:
            coeffs[order + 1:] = terms
        else:
            coeffs[order - 1::-1] = terms
    return FourierSeries(coeffs)


def ising_row_symbol(alpha1, alpha2):
    """
    Return the row-correlation symbol

        ((1 + a1 e^{i theta})(1 + a2 e^{-i theta})
         / ((1 + a1 e^{-i theta})(1 + a2 e^{i theta})))^{1/2}

    as an FHSymbol: smooth for a2 < 1, one jump b=-1/2 at -pi for a2 = 1,
    and the (degenerate) b=-1 form e^{-i theta} a(theta) for a2 > 1.
    """
    if not 0 <= alpha1 < 1:
        raise DomainError('alpha1 must lie in [0, 1)')
    if alpha2 <= 0:
        raise DomainError('alpha2 must be positive')
    alpha1_part = log1p_series(alpha1, 1) - log1p_series(alpha1, -1)
    if abs(alpha2 - 1.0) < 1e-12:
        return FHSymbol(alpha1_part.scaled(0.5),
                        (Singularity(-math.pi, 0.0, -0.5),))
    if alpha2 < 1:
        smooth = alpha1_part + log1p_series(alpha2, -1) \
            - log1p_series(alpha2, 1)
        return FHSymbol(smooth.scaled(0.5))
    inverse = 1.0 / alpha2
    smooth = alpha1_part + log1p_series(inverse, 1) \
        - log1p_series(inverse, -1)
    return FHSymbol(smooth.scaled(0.5), (Singularity(-math.pi, 0.0, -1.0),))


@dataclass(frozen=True, eq=False)
class IsingSymbols:
    """Diagonal and row symbols of the anisotropic square-lattice model."""

    diagonal: FHSymbol
    row: FHSymbol
    alpha1: float
    alpha2: float
    k: float


def ising_parameters(K1, K2):
    """Return (alpha1, alpha2, k) for couplings K1, K2 > 0."""
    if K1 <= 0 or K2 <= 0:
        raise DomainError('couplings must be positive')
    tanh1 = math.tanh(K1)
    decay = math.exp(-2.0 * K2)
    return (decay * tanh1, decay / tanh1,
            math.sinh(2.0 * K1) * math.sinh(2.0 * K2))


def ising_symbols(K1, K2):
    """Return the diagonal and row symbols for couplings K1, K2."""
    alpha1, alpha2, k = ising_parameters(K1, K2)
    return IsingSymbols(diagonal=ising_row_symbol(0.0, 1.0 / k),
                        row=ising_row_symbol(alpha1, alpha2),
                        alpha1=alpha1, alpha2=alpha2, k=k)


def is_high_temperature(alpha1, alpha2):
    """Return True in the regime alpha1 < 1 < alpha2, alpha1 alpha2 < 1."""
    return alpha1 < 1.0 < alpha2 and alpha1 * alpha2 < 1.0


def ising_highT_transformed_symbol(alpha1, alpha2):
    """
    Return (symbol, scale) for the high-temperature row symbol moved to
    the contour |z| = alpha2: g_p(original) = scale^{-p} g_p(returned).
    """
    if not is_high_temperature(alpha1, alpha2):
        raise DomainError('(alpha1, alpha2) = (%g, %g) is not in the '
                          'high-temperature regime' % (alpha1, alpha2))
    smooth = (log1p_series(alpha1 * alpha2, 1)
              - log1p_series(alpha2 ** -2, -1)
              - log1p_series(alpha1 / alpha2, -1)).scaled(0.5)
    smooth = smooth + FourierSeries.from_terms({0: -math.log(alpha2)})
    return (FHSymbol(smooth, (Singularity(-math.pi, 0.25, -0.75),)),
            alpha2)


def ising_determinant_symbol(alpha1, alpha2):
    """
    Return a symbol with the Toeplitz determinants of the row symbol.

    In the high-temperature regime this is the symbol moved to
    |z| = alpha2, whose coefficients decay geometrically.
    """
    if is_high_temperature(alpha1, alpha2):
        return ising_highT_transformed_symbol(alpha1, alpha2)[0]
    return ising_row_symbol(alpha1, alpha2)


def flip_symbol(sym):
    """Return the symbol of g(pi - theta) (only for b_r = 0)."""
    order = sym.smooth_log.order
    p = np.arange(-order, order + 1)
    coeffs = sym.smooth_log.coeffs[::-1] * (-1.0) ** p
    singularities = []
    for sing in sym.singularities:
        if sing.b != 0:
            raise SymbolError('theta -> pi - theta needs b = 0')
        theta = math.remainder(math.pi - sing.theta, 2.0 * math.pi)
        if theta == -math.pi:
            theta = math.pi
        singularities.append(Singularity(theta, sing.a, 0.0))
    return FHSymbol(FourierSeries(coeffs), tuple(singularities))


def cosine_pair_symbol(angles, strength=0.5, smooth_log=None):
    """
    Return prod_r |2(cos theta - cos phi_r)|^{2 strength} as an even
    FHSymbol (strength at each of +-phi_r).
    """
    singularities = []
    for phi in angles:
        if not 0.0 < phi < math.pi:
            raise SymbolError('cosine pair angle must lie in (0, pi)')
        singularities.append(Singularity(phi, strength))
        singularities.append(Singularity(-phi, strength))
    if smooth_log is None:
        smooth_log = FourierSeries.zeros()
    return FHSymbol(smooth_log, tuple(singularities))
