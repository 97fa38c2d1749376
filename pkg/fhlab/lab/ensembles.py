# -*- coding: utf-8 -*-
#
# ensembles.py - exact averages over the classical groups and ensembles
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

"""Ensemble identifiers and exact determinantal averages."""

import logging
import math

from dataclasses import dataclass

import mpmath
from scipy import special

from fhlab.lab import determinants
from fhlab.lab.determinants import (
    GaussWeight, JacobiWeight, LaguerreWeight, LogDet, PrecisionContext)
from fhlab.lab.errors import DomainError, SymbolError
from fhlab.lab.specfun import (
    LogValue, gaussian_norm, jacobi_norm, laguerre_norm, morris_m)
from fhlab.lab.symbols import (
    DEFAULT_SINGULAR_TABLE, CoefficientTable, FHSymbol, FourierSeries,
    Singularity, angular_distance, symbol_fourier)

log = logging.getLogger(__name__)

UNITARY = 'U'
SYMPLECTIC = 'Sp'
ORTHOGONAL_PLUS_EVEN = 'O+even'
ORTHOGONAL_PLUS_ODD = 'O+odd'
ORTHOGONAL_MINUS_ODD = 'O-odd'
CN_LAMBDA = 'C_N'
CBETA = 'CbetaE'
GUE = 'GUE'
LUE = 'LUE'

# group -> (Toeplitz+Hankel variant, log prefactor of the average)
_GROUP_VARIANTS = {
    SYMPLECTIC: (determinants.SP, 0.0),
    ORTHOGONAL_PLUS_EVEN: (determinants.OPLUS_EVEN, -math.log(2.0)),
    ORTHOGONAL_PLUS_ODD: (determinants.OPLUS_ODD, 0.0),
    ORTHOGONAL_MINUS_ODD: (determinants.OMINUS_ODD, 0.0),
}

# (lambda1, lambda2) of the eigenvalue density of each group
GROUP_LAMBDAS = {
    SYMPLECTIC: (1.0, 1.0),
    ORTHOGONAL_PLUS_EVEN: (0.0, 0.0),
    ORTHOGONAL_MINUS_ODD: (1.0, 0.0),
    ORTHOGONAL_PLUS_ODD: (0.0, 1.0),
}


@dataclass(frozen=True)
class EnsembleId:
    """An ensemble with its size and parameters."""

    kind: str
    size: int
    beta: float = 2.0
    scale: float = 1.0
    rate: float = 1.0
    aprime: float = 0.5
    lambda1: float = 0.0
    lambda2: float = 0.0

    def __post_init__(self):
        if self.kind not in (UNITARY, SYMPLECTIC, ORTHOGONAL_PLUS_EVEN,
                             ORTHOGONAL_PLUS_ODD, ORTHOGONAL_MINUS_ODD,
                             CN_LAMBDA, CBETA, GUE, LUE):
            raise DomainError('unknown ensemble "%s"' % self.kind)
        if self.size < 1:
            raise DomainError('ensemble size must be >= 1')
        if self.beta <= 0:
            raise DomainError('beta must be positive')
        if self.kind == CN_LAMBDA and min(self.lambda1, self.lambda2) <= -0.5:
            raise DomainError('C_N(lambda1, lambda2) needs lambda > -1/2')
        if self.kind == LUE and self.aprime - 0.5 <= -1:
            raise DomainError("LUE needs a' - 1/2 > -1")

    @classmethod
    def unitary(cls, n):
        return cls(UNITARY, n)

    @classmethod
    def symplectic(cls, N):
        return cls(SYMPLECTIC, N)

    @classmethod
    def orthogonal_plus_even(cls, N):
        """O+(2N)."""
        return cls(ORTHOGONAL_PLUS_EVEN, N)

    @classmethod
    def orthogonal_plus_odd(cls, N):
        """O+(2N+1)."""
        return cls(ORTHOGONAL_PLUS_ODD, N)

    @classmethod
    def orthogonal_minus_odd(cls, N):
        """O-(2N+1)."""
        return cls(ORTHOGONAL_MINUS_ODD, N)

    @classmethod
    def cn_lambda(cls, N, lambda1, lambda2):
        return cls(CN_LAMBDA, N, lambda1=lambda1, lambda2=lambda2)

    @classmethod
    def cbeta(cls, n, beta):
        return cls(CBETA, n, beta=beta)

    @classmethod
    def gue(cls, N, scale=None):
        """GUE with weight exp(-a^2 x^2), a = sqrt(2N) unless given."""
        return cls(GUE, N, scale=math.sqrt(2.0 * N) if scale is None
                   else scale)

    @classmethod
    def lue(cls, N, aprime, rate=None):
        """LUE with weight x^(a'-1/2) exp(-c x), c = 4N unless given."""
        return cls(LUE, N, aprime=aprime,
                   rate=4.0 * N if rate is None else rate)

    def __str__(self):
        names = {
            UNITARY: 'U(%d)' % self.size,
            SYMPLECTIC: 'Sp(%d)' % self.size,
            ORTHOGONAL_PLUS_EVEN: 'O+(%d)' % (2 * self.size),
            ORTHOGONAL_PLUS_ODD: 'O+(%d)' % (2 * self.size + 1),
            ORTHOGONAL_MINUS_ODD: 'O-(%d)' % (2 * self.size + 1),
            CN_LAMBDA: 'C_%d(%g, %g)' % (self.size, self.lambda1,
                                         self.lambda2),
            CBETA: 'CbetaE(%d, %g)' % (self.size, self.beta),
            GUE: 'GUE(%d, a=%g)' % (self.size, self.scale),
            LUE: "LUE(%d, c=%g, a'=%g)" % (self.size, self.rate,
                                            self.aprime),
        }
        return names[self.kind]


def _coefficient_table(symbol, order, table_size):
    if isinstance(symbol, CoefficientTable):
        return symbol
    return symbol_fourier(symbol, order, table_size=table_size)


def group_average(ensemble, symbol, ctx=PrecisionContext(),
                  table_size=DEFAULT_SINGULAR_TABLE):
    """
    Return the average of prod_l g(theta_l) over a classical group.

    symbol is an FHSymbol or a CoefficientTable; non-unitary groups need
    an even symbol.
    """
    if ensemble.kind == UNITARY:
        table = _coefficient_table(symbol, ensemble.size, table_size)
        return determinants.toeplitz_logdet(table, ensemble.size, ctx)
    if ensemble.kind == CN_LAMBDA:
        if not isinstance(symbol, FHSymbol):
            raise SymbolError('C_N(lambda1, lambda2) averages need an '
                              'FHSymbol')
        return cn_lambda_average(ensemble.size, ensemble.lambda1,
                                 ensemble.lambda2, symbol, ctx)
    if ensemble.kind not in _GROUP_VARIANTS:
        raise DomainError('%s has no determinantal group average'
                          % ensemble)
    if isinstance(symbol, FHSymbol) and not symbol.is_even():
        raise SymbolError('%s average needs an even symbol' % ensemble)
    variant, log_prefactor = _GROUP_VARIANTS[ensemble.kind]
    table = _coefficient_table(symbol, 2 * ensemble.size + 2, table_size)
    value = determinants.toeplitz_hankel_logdet(variant, table,
                                                ensemble.size, ctx)
    return value * LogDet(log_prefactor)


def _cos_series(smooth_log):
    """Return (c_0, [c_1, ..., c_P]) of an even real log a."""
    if not smooth_log.is_even(1e-12):
        raise SymbolError('smooth part must be even')
    coeffs = [complex(c) for c in smooth_log.positive()]
    return complex(smooth_log.c0), coeffs


def _smooth_of_x(smooth_log):
    """Return x -> a(theta) with x = (1 + cos theta)/2, for mpmath x."""
    if smooth_log.is_zero():
        return None
    c0, coeffs = _cos_series(smooth_log)

    def smooth(x):
        theta = mpmath.acos(2 * x - 1)
        total = mpmath.mpc(c0)
        for p, coeff in enumerate(coeffs, start=1):
            total += 2 * mpmath.mpc(coeff) * mpmath.cos(p * theta)
        value = mpmath.exp(total)
        if mpmath.im(value) == 0:
            return mpmath.re(value)
        return value
    return smooth


def cn_lambda_average(N, lambda1, lambda2, sym, ctx=PrecisionContext()):
    """
    Return the C_N(lambda1, lambda2) average of prod_l g(theta_l).

    With x = (1 + cos theta)/2 the density becomes the Jacobi weight
    x^(lambda1-1/2) (1-x)^(lambda2-1/2), and the average a Hankel
    determinant of Jacobi moments.
    """
    if min(lambda1, lambda2) <= -0.5:
        raise DomainError('C_N(lambda1, lambda2) needs lambda > -1/2')
    if not sym.is_even():
        raise SymbolError('C_N(lambda1, lambda2) averages need an even symbol')
    edge0 = lambda1 - 0.5
    edge1 = lambda2 - 0.5
    log_const = 0.0
    points = []
    powers = []
    for sing in sym.singularities:
        if angular_distance(sing.theta, math.pi) < 1e-12:
            edge0 += sing.a
            log_const += sing.a * math.log(4.0)
        elif angular_distance(sing.theta, 0.0) < 1e-12:
            edge1 += sing.a
            log_const += sing.a * math.log(4.0)
        elif sing.theta > 0:
            # the partner at -theta completes |2(cos theta - cos phi)|^{2a}
            points.append(0.5 * (1.0 + math.cos(sing.theta)))
            powers.append(2.0 * sing.a)
            log_const += 2.0 * sing.a * math.log(4.0)
    ctx = determinants.hankel_context(ctx, N)
    moments = determinants.weighted_moments(
        JacobiWeight(edge0, edge1), 2 * N - 2, ctx, points, powers,
        _smooth_of_x(sym.smooth_log))
    value = determinants.hankel_logdet(moments, N, ctx)
    scale = LogDet(float(special.gammaln(N + 1)) + N * log_const)
    return value * scale / jacobi_norm(N, lambda1 - 0.5, lambda2 - 0.5)


def gaussian_average(N, scale, points=(), powers=(), smooth=None,
                     ctx=PrecisionContext()):
    """Return G_{N,a}[prod |x - y_r|^{p_r} smooth(x)] as LogValue."""
    ctx = determinants.hankel_context(ctx, N)
    moments = determinants.weighted_moments(GaussWeight(scale), 2 * N - 2,
                                            ctx, points, powers, smooth)
    return determinants.hankel_logdet(moments, N, ctx) * \
        LogValue(float(special.gammaln(N + 1)))


def laguerre_average(N, rate, aprime, points=(), powers=(), smooth=None,
                     ctx=PrecisionContext()):
    """Return L~_{N,c}[prod |x - t_r|^{p_r} smooth(x)] as LogValue."""
    ctx = determinants.hankel_context(ctx, N)
    moments = determinants.weighted_moments(
        LaguerreWeight(rate, aprime), 2 * N - 2, ctx, points, powers, smooth)
    return determinants.hankel_logdet(moments, N, ctx) * \
        LogValue(float(special.gammaln(N + 1)))


def gaussian_duality(N, q, y, scale, ctx=PrecisionContext()):
    """
    Return both sides of the Gaussian duality for integer q >= 0:

        G_{N,a}[(x-y)^{2q}] / G_{N,a}[1]
            = G_{2q,a}[(y + i x)^N] / G_{2q,a}[1]
    """
    if q < 0 or q != int(q):
        raise DomainError('duality needs an integer q >= 0')
    q = int(q)
    lhs = gaussian_average(N, scale, (y,), (2 * q,), ctx=ctx) / \
        gaussian_norm(N, scale)
    if q == 0:
        return lhs, LogValue(0.0)

    def power(x):
        return mpmath.mpc(y, x) ** N
    rhs = gaussian_average(2 * q, scale, smooth=power, ctx=ctx) / \
        gaussian_norm(2 * q, scale)
    return lhs, rhs


def laguerre_duality_symbol(N, aprime, t, rate):
    """
    Return the circular symbol e^{i theta (a-N)/2} |1 + e^{i theta}|^{a+N}
    e^{-c t e^{i theta}}, a = a' - 1/2, dual to the Laguerre average.
    """
    a = aprime - 0.5
    return FHSymbol(FourierSeries.from_terms({1: -rate * t}),
                    (Singularity(math.pi, 0.5 * (a + N), 0.5 * (a - N)),))


def laguerre_duality(N, q, t, rate, aprime, ctx=PrecisionContext()):
    """
    Return both sides of the Laguerre duality for integer q >= 0:

        L~_{N,c}[|x-t|^{2q}] / L~_{N,c}[1]|_{a' -> a'+2q}
            = (2q)! D_{2q}[symbol] / M_{2q}(a' - 1/2, N)
    """
    if q < 0 or q != int(q):
        raise DomainError('duality needs an integer q >= 0')
    q = int(q)
    lhs = laguerre_average(N, rate, aprime, (t,), (2 * q,), ctx=ctx) / \
        laguerre_norm(N, rate, aprime + 2 * q)
    size = 2 * q
    if size == 0:
        return lhs, LogValue(0.0)
    table = symbol_fourier(laguerre_duality_symbol(N, aprime, t, rate), size)
    det = determinants.toeplitz_logdet(table, size, ctx)
    rhs = det * LogValue(float(special.gammaln(size + 1))) / \
        morris_m(size, aprime - 0.5, N)
    return lhs, rhs


def gaussian_laguerre_factorization(N, scale, points=(), powers=(),
                                    smooth_even=None, ctx=PrecisionContext()):
    """
    Return both sides of the even-weight factorization

        G_{2N,a}[g]/G_{2N,a}[1] = L^(0)_{N,a}[g]/L^(0)_{N,a}[1]
                                  * L^(2)_{N,a}[g]/L^(2)_{N,a}[1]

    for g(x) = smooth_even(x) prod_r |x^2 - y_r^2|^{p_r}, y_r > 0.
    """
    points = tuple(float(y) for y in points)
    powers = tuple(float(p) for p in powers)
    if any(y <= 0 for y in points):
        raise DomainError('factorization points must be positive')
    gauss_points = tuple(-y for y in points) + points
    gauss_powers = powers + powers
    smooth_sq = None
    if smooth_even is not None:
        def smooth_sq(u):
            return smooth_even(mpmath.sqrt(u))

    # |x^2 - y^2|^p = |x - y|^p |x + y|^p on the full line
    lhs = gaussian_average(2 * N, scale, gauss_points, gauss_powers,
                           smooth_even, ctx) / gaussian_norm(2 * N, scale)
    rate = scale * scale
    squares = tuple(y * y for y in points)
    rhs = LogValue(0.0)
    for aprime in (0.0, 1.0):
        rhs = rhs * (laguerre_average(N, rate, aprime, squares, powers,
                                      smooth_sq, ctx)
                     / laguerre_norm(N, rate, aprime))
    return lhs, rhs


def norm_ratio_vf(n):
    """
    Return G_{2n,sqrt(4n)}[1] / (L_n[1]|_{a'=0} L_n[1]|_{a'=1}) from the
    closed forms, which equals 2^{2n} (2n)!/(n!)^2.
    """
    if n < 1:
        raise DomainError('n must be >= 1')
    half_line = LogValue(-n * math.log(2.0))
    gauss = gaussian_norm(2 * n, math.sqrt(4.0 * n))
    return gauss / (half_line * laguerre_norm(n, 4.0 * n, 0.0)
                    * half_line * laguerre_norm(n, 4.0 * n, 1.0))


def half_line_norm(N, aprime):
    """Return L_N[1] for the weight x^{2a'} exp(-4N x^2) on (0, inf)."""
    return LogValue(-N * math.log(2.0)) * laguerre_norm(N, 4.0 * N, aprime)
