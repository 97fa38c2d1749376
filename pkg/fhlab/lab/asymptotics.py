# -*- coding: utf-8 -*-
#
# asymptotics.py - closed-form asymptotic predictors
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

"""Asymptotic predictors for Toeplitz, Toeplitz+Hankel and Hankel averages."""

import cmath
import logging
import math

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.polynomial import Chebyshev, Polynomial
from numpy.polynomial import chebyshev

from fhlab.lab.errors import DegenerateError, DomainError, SymbolError
from fhlab.lab.specfun import (
    LOG_2PI, LogValue, is_nonpositive_integer, log_barnes_g)
from fhlab.lab.symbols import (
    angular_distance, ising_highT_transformed_symbol, szego_condition,
    szego_sum, szego_tail, wiener_hopf_split)

log = logging.getLogger(__name__)

FORMULA_SZEGO = 'szego'
FORMULA_FH = 'fisher-hartwig'
FORMULA_ISING_HIGHT = 'ising-high-temperature'
FORMULA_ISING_HIGHT_CLOSED = 'ising-high-temperature-closed-form'
FORMULA_ISING_CRITICAL = 'ising-critical'
FORMULA_BETA_FH = 'beta-fisher-hartwig'
FORMULA_TOEPLITZ_HANKEL = 'toeplitz-hankel-odd'
FORMULA_CN_LAMBDA = 'cn-lambda'
FORMULA_HANKEL_GUE = 'hankel-gue'
FORMULA_HANKEL_LUE = 'hankel-lue'
FORMULA_UNIVERSAL = 'universal'

GEOMETRY_LINE = 'line'
GEOMETRY_CIRCLE = 'circle'

# Chebyshev degree used for the even extension a(|x|) of a non-even
# polynomial
_EVEN_EXTENSION_DEGREE = 256

_DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class Prediction:
    """
    Large-size form exp(coeff_n n + coeff_logn log n + log_constant).

    n_convention says which size the formula is written in and which
    normalisation the predicted quantity carries.
    """

    coeff_n: complex
    coeff_logn: float
    log_constant: complex
    n_convention: str = 'n'
    formula: str = FORMULA_FH
    degenerate: bool = False
    proved_regime: bool = None

    def log_value(self, size):
        """Return the predicted complex logarithm at size."""
        if self.degenerate:
            raise DegenerateError('%s prediction is degenerate' % self.formula)
        if size <= 0:
            raise DomainError('size must be positive')
        return (complex(self.coeff_n) * size
                + self.coeff_logn * math.log(size)
                + complex(self.log_constant))

    def evaluate(self, size):
        """Return the predicted value at size as LogValue."""
        return LogValue.from_log(self.log_value(size))

    def __str__(self):
        if self.degenerate:
            return '%s: degenerate' % self.formula
        return ('%s: exp((%.12g) n) n^(%.12g) exp(%.12g) [%s]'
                % (self.formula, complex(self.coeff_n).real,
                   self.coeff_logn, complex(self.log_constant).real,
                   self.n_convention))


def _log_g(z):
    """Return log G(z) as complex (sign as phase) or None at a zero."""
    value = log_barnes_g(z, extend=True)
    if value.zero:
        return None
    return value.log


def is_degenerate(sing):
    """Return True if 1 + a + b or 1 + a - b is 0, -1, -2, ..."""
    return (is_nonpositive_integer(1.0 + sing.a + sing.b, _DEGENERACY_TOL)
            or is_nonpositive_integer(1.0 + sing.a - sing.b,
                                      _DEGENERACY_TOL))


def _check_szego(series):
    condition = szego_condition(series)
    if not math.isfinite(condition):
        raise SymbolError('Szego condition sum diverges')
    tail = szego_tail(series)
    if condition and tail > 1e-10 * condition:
        log.debug('Szego sum tail %.3g of %.3g; truncation may be short',
                  tail, condition)


def predict_szego(series):
    """Return the strong Szego prediction for a smooth symbol."""
    _check_szego(series)
    return Prediction(coeff_n=complex(series.c0), coeff_logn=0.0,
                      log_constant=szego_sum(series),
                      n_convention='n = matrix size', formula=FORMULA_SZEGO,
                      proved_regime=True)


def _pair_log(theta_r, theta_s):
    """Return the principal log(1 - e^{i(theta_s - theta_r)})."""
    return cmath.log(1.0 - cmath.exp(1j * (theta_s - theta_r)))


def _proved_fh_regime(singularities):
    if not singularities:
        return True
    if len(singularities) > 1:
        return False
    sing = singularities[0]
    return sing.a >= 0 and sing.a + sing.b > -1 and sing.a - sing.b > -1


def predict_fh(sym):
    """Return the Fisher-Hartwig prediction for D_n[g]."""
    series = sym.smooth_log
    _check_szego(series)
    singularities = sym.singularities
    total = szego_sum(series)
    degenerate = False
    for sing in singularities:
        plus, minus = wiener_hopf_split(series, sing.theta)
        total -= (sing.a + sing.b) * minus + (sing.a - sing.b) * plus
        for other in singularities:
            if other is sing:
                continue
            total -= ((sing.a + sing.b) * (other.a - other.b)
                      * _pair_log(sing.theta, other.theta))
        if is_degenerate(sing):
            degenerate = True
            continue
        total += (_log_g(1.0 + sing.a + sing.b)
                  + _log_g(1.0 + sing.a - sing.b)
                  - _log_g(1.0 + 2.0 * sing.a))
    if degenerate:
        log.debug('Fisher-Hartwig constant vanishes (Barnes G zero)')
        total = complex(-math.inf, 0.0)
    return Prediction(
        coeff_n=complex(series.c0),
        coeff_logn=float(sum(s.a ** 2 - s.b ** 2 for s in singularities)),
        log_constant=total, n_convention='n = matrix size',
        formula=FORMULA_FH, degenerate=degenerate,
        proved_regime=_proved_fh_regime(singularities))


def predict_ising_highT(alpha1, alpha2):
    """
    Return the high-temperature row-correlator prediction from the
    Fisher-Hartwig formula applied to the symbol moved to |z| = alpha2.
    """
    sym, _ = ising_highT_transformed_symbol(alpha1, alpha2)
    prediction = predict_fh(sym)
    return Prediction(coeff_n=prediction.coeff_n,
                      coeff_logn=prediction.coeff_logn,
                      log_constant=prediction.log_constant,
                      n_convention='n = row separation',
                      formula=FORMULA_ISING_HIGHT,
                      degenerate=prediction.degenerate,
                      proved_regime=prediction.proved_regime)


def ising_highT_closed_form(alpha1, alpha2):
    """
    Return alpha2^-n (pi n)^-1/2 (1-alpha1^2)^1/4 (1-alpha2^-2)^-1/4
    (1-alpha1 alpha2)^-1/2 as a Prediction.
    """
    if not (0 <= alpha1 < 1 < alpha2 and alpha1 * alpha2 < 1):
        raise DomainError('(alpha1, alpha2) = (%g, %g) is not in the '
                          'high-temperature regime' % (alpha1, alpha2))
    constant = (-0.5 * math.log(math.pi)
                + 0.25 * math.log1p(-alpha1 * alpha1)
                - 0.25 * math.log1p(-alpha2 ** -2)
                - 0.5 * math.log1p(-alpha1 * alpha2))
    return Prediction(coeff_n=complex(-math.log(alpha2)), coeff_logn=-0.5,
                      log_constant=complex(constant),
                      n_convention='n = row separation',
                      formula=FORMULA_ISING_HIGHT_CLOSED,
                      proved_regime=True)


def ising_critical_closed_form(alpha1):
    """Return ((1+a1)/(1-a1))^1/4 sqrt(pi) G(1/2)^2 n^-1/4."""
    if not 0 <= alpha1 < 1:
        raise DomainError('alpha1 must lie in [0, 1)')
    constant = (0.25 * (math.log1p(alpha1) - math.log1p(-alpha1))
                + 0.5 * math.log(math.pi)
                + 2.0 * log_barnes_g(0.5).log_modulus)
    return Prediction(coeff_n=0j, coeff_logn=-0.25,
                      log_constant=complex(constant),
                      n_convention='n = row separation',
                      formula=FORMULA_ISING_CRITICAL, proved_regime=True)


def _rational_half_beta(beta, s=None, r=None):
    """Return (s, r) coprime with beta/2 = s/r."""
    if s is None or r is None:
        fraction = Fraction(beta / 2.0).limit_denominator(64)
        if abs(float(fraction) - beta / 2.0) > 1e-12:
            raise DomainError('beta = %g is not a small rational' % beta)
        s, r = fraction.numerator, fraction.denominator
    if s < 1 or r < 1 or math.gcd(s, r) != 1:
        raise DomainError('need coprime s, r >= 1 (got %d, %d)' % (s, r))
    if abs(2.0 * s / r - beta) > 1e-12:
        raise DomainError('beta = %g does not equal 2 s / r' % beta)
    return s, r


def log_a_qb(q, b, s, r):
    """
    Return log A_{q,b} for beta/2 = s/r, or None when a numerator Barnes
    G vanishes.
    """
    beta = 2.0 * s / r
    total = complex(-(q * q - b * b) * beta / 2.0 * math.log(r))
    for nu in range(r):
        for p in range(s):
            shift = nu / r - p / s + 1.0
            first = _log_g((q + b) / r + shift)
            second = _log_g((q - b) / r + shift)
            if first is None or second is None:
                return None
            dens = (_log_g(2.0 * q / r + shift), _log_g(shift))
            if dens[0] is None or dens[1] is None:
                raise DomainError('Barnes G zero in the denominator of '
                                  'A_{q,b} (q=%g, b=%g)' % (q, b))
            total += first + second - dens[0] - dens[1]
    return total


def predict_beta_fh(sym, beta, s=None, r=None):
    """
    Return the CbetaE prediction for the average of

        a(theta) prod_j e^{-i (beta/2) b_j arg}
            |e^{i theta} - e^{i phi_j}|^{beta q_j}

    with (phi_j, q_j, b_j) read from the singularities of sym.
    """
    s, r = _rational_half_beta(beta, s, r)
    c = beta / 2.0
    series = sym.smooth_log
    _check_szego(series)
    singularities = sym.singularities
    for sing in singularities:
        if sing.a * beta <= -1:
            raise DomainError('need q beta > -1 (q=%g, beta=%g)'
                              % (sing.a, beta))
    total = szego_sum(series) / c
    degenerate = False
    for sing in singularities:
        q, b = sing.a, sing.b
        plus, minus = wiener_hopf_split(series, sing.theta)
        total -= (q + b) * minus + (q - b) * plus
        for other in singularities:
            if other is sing:
                continue
            total -= (c * (q + b) * (other.a - other.b)
                      * _pair_log(sing.theta, other.theta))
        a_qb = log_a_qb(q, b, s, r)
        if a_qb is None:
            degenerate = True
        else:
            total += a_qb
    if degenerate:
        total = complex(-math.inf, 0.0)
    return Prediction(
        coeff_n=complex(series.c0),
        coeff_logn=float(c * sum(x.a ** 2 - x.b ** 2
                                 for x in singularities)),
        log_constant=total,
        n_convention='n = CbetaE size, beta = 2*%d/%d' % (s, r),
        formula=FORMULA_BETA_FH, degenerate=degenerate,
        proved_regime=False)


def _even_pairs(sym):
    """Return [(theta_r, a_r)] with theta_r in (0, pi) for an even symbol."""
    if not sym.is_even():
        raise SymbolError('Toeplitz+Hankel predictions need an even symbol')
    pairs = []
    for sing in sym.singularities:
        if sing.b != 0:
            raise SymbolError('Toeplitz+Hankel predictions need b = 0')
        if angular_distance(sing.theta, 0.0) < 1e-12 or \
                angular_distance(sing.theta, math.pi) < 1e-12:
            raise DomainError('singularity at theta = %g is excluded'
                              % sing.theta)
        if sing.theta > 0:
            pairs.append((sing.theta, sing.a))
    return pairs


def _cos_coeffs(series):
    """Return the real c_1, c_2, ... of an even real log a."""
    return np.real(series.positive())


def _log_a_at(series, theta):
    """Return log a(theta) = c_0 + 2 sum c_n cos n theta (even series)."""
    n = np.arange(1, series.order + 1)
    return float(np.real(series.c0)
                 + 2.0 * np.sum(_cos_coeffs(series) * np.cos(n * theta)))


def _toeplitz_hankel_parts(sym):
    """Return (c0, coeff_logn, log E with the leading terms folded in)."""
    pairs = _even_pairs(sym)
    series = sym.smooth_log
    _check_szego(series)
    coeffs = _cos_coeffs(series)
    c0 = float(np.real(series.c0))
    k = np.arange(1, len(coeffs) + 1)
    strengths = sum(a for _, a in pairs)
    squares = sum(a * a for _, a in pairs)
    total = (strengths * c0 + squares * math.log(2.0)
             + 0.5 * float(np.sum(k * coeffs ** 2))
             + float(np.sum(coeffs[0::2])))
    for i, (theta, a) in enumerate(pairs):
        total += (2.0 * _log_g(1.0 + a) - _log_g(1.0 + 2.0 * a)).real
        total -= a * _log_a_at(series, theta)
        total += (a * math.log(abs(1.0 - cmath.exp(1j * theta)))
                  - a * math.log(abs(1.0 + cmath.exp(1j * theta)))
                  - a * a * math.log(abs(1.0 - cmath.exp(2j * theta))))
        for theta_s, a_s in pairs[i + 1:]:
            total -= 2.0 * a * a_s * (
                math.log(abs(1.0 - cmath.exp(1j * (theta - theta_s))))
                + math.log(abs(1.0 - cmath.exp(1j * (theta + theta_s)))))
    return c0, squares, total


def predict_toeplitz_hankel(sym):
    """
    Return the prediction for det[g_{j-k} + g_{j+k+1}], the O-(2N+1)
    average, of an even symbol with b_r = 0 away from 0 and pi.
    """
    c0, squares, total = _toeplitz_hankel_parts(sym)
    return Prediction(coeff_n=complex(c0), coeff_logn=squares,
                      log_constant=complex(total),
                      n_convention='N, for O-(2N+1)',
                      formula=FORMULA_TOEPLITZ_HANKEL, proved_regime=True)


def predict_cn_lambda(sym, lambda1, lambda2):
    """
    Return the prediction for the C_N(lambda1 + 1/2, lambda2 + 1/2)
    average of an even symbol (lambda = (1/2, -1/2) is O-(2N+1)).
    """
    if min(lambda1, lambda2) <= -1:
        raise DomainError('need lambda1, lambda2 > -1')
    c0, squares, total = _toeplitz_hankel_parts(sym)
    for theta, a in _even_pairs(sym):
        total -= a * ((2.0 * lambda1 - 1.0)
                      * math.log(abs(1.0 + cmath.exp(1j * theta)))
                      + (2.0 * lambda2 + 1.0)
                      * math.log(abs(1.0 - cmath.exp(1j * theta))))
    coeffs = _cos_coeffs(sym.smooth_log)
    signs = (-1.0) ** np.arange(1, len(coeffs) + 1)
    total -= float(np.sum(coeffs * ((lambda1 - 0.5) * signs
                                    + lambda2 + 0.5)))
    return Prediction(
        coeff_n=complex(c0), coeff_logn=squares, log_constant=complex(total),
        n_convention='N, for C_N(%g, %g)' % (lambda1 + 0.5, lambda2 + 0.5),
        formula=FORMULA_CN_LAMBDA, proved_regime=(lambda1, lambda2)
        in ((0.5, -0.5), (-0.5, 0.5)))


def _polynomial(smooth):
    if smooth is None:
        return Polynomial([0.0])
    if isinstance(smooth, Polynomial):
        return smooth
    return Polynomial(np.asarray(smooth, dtype=float))


def _chebyshev_terms(cheb):
    """Return (mean, variance) from the Chebyshev coefficients of a."""
    coef = np.asarray(cheb, dtype=float)
    c = np.zeros(max(len(coef), 3))
    c[0] = coef[0]
    c[1:len(coef)] = 0.5 * coef[1:]
    n = np.arange(1, len(c))
    return float(c[0] - c[2]), float(0.5 * np.sum(n * c[1:] ** 2))


def johansson_gue(smooth):
    """
    Return (mean, variance) of log G_N[e^a]/G_N[1] ~ N mean + variance
    for the Gaussian weight exp(-2N x^2) and polynomial a.
    """
    cheb = _polynomial(smooth).convert(kind=Chebyshev).coef
    return _chebyshev_terms(cheb)


def _is_even_polynomial(poly):
    return not np.any(poly.coef[1::2])


def johansson_lue(smooth, aprime):
    """
    Return (mean, constant) of log L_N[e^a]/L_N[1] ~ N mean + constant
    for the half-line weight x^{2a'} exp(-4N x^2).

    The even extension a(|x|) carries the Gaussian terms; the a' = 0 and
    a' = 1 constants add up to its variance term, and the hard edge at 0
    adds (2a'-1)/4 times (arcsine mean of a) - a(0).
    """
    poly = _polynomial(smooth)
    if _is_even_polynomial(poly):
        cheb = poly.convert(kind=Chebyshev).coef
    else:
        cheb = chebyshev.chebinterpolate(lambda x: poly(np.abs(x)),
                                         _EVEN_EXTENSION_DEGREE)
    mean, variance = _chebyshev_terms(cheb)
    constant = (0.5 * variance + (2.0 * aprime - 1.0) / 4.0
                * (float(cheb[0]) - float(poly(0.0))))
    return mean, constant


def _check_points(points, exponents, low, high):
    points = tuple(float(y) for y in points)
    exponents = tuple(float(q) for q in exponents)
    if len(points) != len(exponents):
        raise DomainError('points and exponents differ in length')
    for y, q in zip(points, exponents):
        if not low < y < high:
            raise DomainError('point %g outside (%g, %g)' % (y, low, high))
        if q <= -0.5:
            raise DomainError('exponent q=%g <= -1/2' % q)
    if len(set(points)) != len(points):
        raise DomainError('points must be distinct')
    return points, exponents


def _g_ratio(q):
    return (2.0 * _log_g(q + 1.0) - _log_g(2.0 * q + 1.0)).real


def predict_hankel_gue(points, exponents, smooth=None):
    """
    Return the prediction for G_{N,sqrt(2N)}[e^a prod |x - y_r|^{2q_r}]
    divided by G_{N+Q,sqrt(2N)}[1], Q = sum q_r.
    """
    points, exponents = _check_points(points, exponents, -1.0, 1.0)
    poly = _polynomial(smooth)
    mean, variance = johansson_gue(poly)
    total_q = sum(exponents)
    constant = total_q * mean + variance
    for i, (y, q) in enumerate(zip(points, exponents)):
        constant += (_g_ratio(q) + (2.0 * q * q - q) * math.log(2.0)
                     - q * math.log(math.pi)
                     + 0.5 * q * q * math.log1p(-y * y)
                     - q * float(poly(y)))
        for y_k, q_k in zip(points[i + 1:], exponents[i + 1:]):
            constant -= 2.0 * q * q_k * math.log(abs(y - y_k))
    return Prediction(
        coeff_n=complex(mean + 2.0 * sum(q * y * y for y, q
                                         in zip(points, exponents))),
        coeff_logn=float(sum(q * q - q for q in exponents)),
        log_constant=complex(constant),
        n_convention='N: G_{N,sqrt(2N)}[e^a prod|x-y|^2q] / '
                     'G_{N+Q,sqrt(2N)}[1]',
        formula=FORMULA_HANKEL_GUE, proved_regime=False)


def predict_hankel_lue(points, exponents, aprime, smooth=None):
    """
    Return the prediction for L_N[e^a prod |x^2 - y_r^2|^{2q_r}] divided
    by L_{N+Q}[1], L_N the half-line average with weight x^{2a'} e^{-4N x^2}.
    """
    if aprime - 0.5 <= -1:
        raise DomainError("need a' - 1/2 > -1")
    points, exponents = _check_points(points, exponents, 0.0, 1.0)
    poly = _polynomial(smooth)
    mean, constant = johansson_lue(poly, aprime)
    total_q = sum(exponents)
    constant += total_q * mean
    for i, (y, q) in enumerate(zip(points, exponents)):
        constant += (_g_ratio(q) + 2.0 * q * q * math.log(2.0)
                     - q * math.log(math.pi)
                     + (q - q * q) * math.log(y)
                     + 0.5 * q * q * math.log1p(-y * y)
                     - 2.0 * aprime * q * math.log(y)
                     - q * float(poly(y)))
        for y_k, q_k in zip(points[i + 1:], exponents[i + 1:]):
            constant -= 2.0 * q * q_k * math.log(abs(y * y - y_k * y_k))
    return Prediction(
        coeff_n=complex(mean + 4.0 * sum(q * y * y for y, q
                                         in zip(points, exponents))),
        coeff_logn=float(sum(q * q - q for q in exponents)),
        log_constant=complex(constant),
        n_convention="N: L_N[e^a prod|x^2-y^2|^2q] / L_{N+Q}[1], "
                     "a'=%g" % aprime,
        formula=FORMULA_HANKEL_LUE, proved_regime=False)


def predict_universal(density, points, exponents, smooth=None,
                      support=(-1.0, 1.0), geometry=GEOMETRY_LINE):
    """
    Return the universal form of a ratio with power singularities in a
    log-gas of density rho (normalised to 1 on its support).

    On the line the ratio is A_n[e^a prod |x - y|^{2q}] / A_{n+Q}[e^a]
    times prod e^{-n q V(y)}; on the circle (angles y, chord distances)
    it is D_n[e^a prod |e^{i theta} - e^{i y}|^{2q}] / D_n[e^a].
    """
    if geometry == GEOMETRY_CIRCLE:
        low, high = -math.pi, math.pi
    elif geometry == GEOMETRY_LINE:
        low, high = support
    else:
        raise DomainError('unknown geometry "%s"' % geometry)
    points, exponents = _check_points(points, exponents, low, high)
    constant = 0.0
    for i, (y, q) in enumerate(zip(points, exponents)):
        rho = float(density(y))
        if not (math.isfinite(rho) and rho > 0):
            raise DomainError('density %g at %g is not positive and finite'
                              % (rho, y))
        constant += _g_ratio(q)
        if geometry == GEOMETRY_CIRCLE:
            constant += q * q * (LOG_2PI + math.log(rho))
        else:
            constant += (q * q - q) * LOG_2PI + q * q * math.log(rho)
        if smooth is not None:
            constant -= q * float(smooth(y))
        for y_k, q_k in zip(points[i + 1:], exponents[i + 1:]):
            if geometry == GEOMETRY_CIRCLE:
                distance = abs(cmath.exp(1j * y) - cmath.exp(1j * y_k))
            else:
                distance = abs(y - y_k)
            constant -= 2.0 * q * q_k * math.log(distance)
    if geometry == GEOMETRY_CIRCLE:
        logn = sum(q * q for q in exponents)
    else:
        logn = sum(q * q - q for q in exponents)
    return Prediction(coeff_n=0j, coeff_logn=float(logn),
                      log_constant=complex(constant),
                      n_convention='n, %s log-gas' % geometry,
                      formula=FORMULA_UNIVERSAL, proved_regime=False)


def gaussian_fluctuation_params(series, beta, charges=()):
    """
    Return (mu per n, sigma^2, coefficient of log n in sigma^2) for the
    linear statistic sum_l a(theta_l) + beta sum_j q_j log|e^{i theta_l}
    - e^{i phi_j}| in CbetaE.
    """
    if beta <= 0:
        raise DomainError('beta must be positive')
    k = np.arange(1, series.order + 1)
    sigma2 = 4.0 / beta * float(np.real(np.sum(
        k * series.positive() * series.negative())))
    logn = beta * float(sum(q * q for q in charges))
    return float(np.real(series.c0)), sigma2, logn
