# -*- coding: utf-8 -*-
#
# specfun.py - Gamma, Barnes G and closed-form normalizations
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

"""Special functions in log form: Gamma, Barnes G, Selberg-type products."""

import math

from dataclasses import dataclass

import numpy as np
from scipy import special

from fhlab.lab.errors import DomainError

LOG_2PI = math.log(2.0 * math.pi)

# zeta'(-1) = 1/12 - log(Glaisher constant)
ZETA_PRIME_MINUS_1 = -0.16542114370045092

# B_4, B_6, ..., B_14
_BERNOULLI_EVEN = (-1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
                   -691.0 / 2730.0, 7.0 / 6.0)

# log G(1+w) is taken from the asymptotic series once w reaches this
_BARNES_SHIFT = 12.0

# positive integers up to this bound use the factorial product
_BARNES_INTEGER_MAX = 400


def wrap_phase(phase):
    """Return phase reduced to (-pi, pi]."""
    wrapped = math.fmod(phase + math.pi, 2.0 * math.pi)
    if wrapped < 0:
        wrapped += 2.0 * math.pi
    wrapped -= math.pi
    if wrapped <= -math.pi:
        wrapped = math.pi
    return wrapped


def is_nonpositive_integer(x, tol=0.0):
    """Return True if x is 0, -1, -2, ... (within tol)."""
    return x <= tol and abs(x - round(x)) <= tol


@dataclass(frozen=True)
class LogValue:
    """Nonzero real or complex number stored as log modulus and phase."""

    log_modulus: float
    sign_phase: float = 0.0
    zero: bool = False

    @classmethod
    def zero_value(cls):
        """Return the exact zero."""
        return cls(-math.inf, 0.0, True)

    @classmethod
    def from_number(cls, value):
        """Return LogValue of a real or complex number."""
        if value == 0:
            return cls.zero_value()
        value = complex(value)
        return cls(math.log(abs(value)),
                   wrap_phase(math.atan2(value.imag, value.real)))

    @classmethod
    def from_log(cls, log):
        """Return LogValue of exp(log), log real or complex."""
        log = complex(log)
        if log.real == -math.inf:
            return cls.zero_value()
        return cls(log.real, wrap_phase(log.imag))

    @property
    def log(self):
        """Return the complex logarithm."""
        if self.zero:
            return complex(-math.inf, 0.0)
        return complex(self.log_modulus, self.sign_phase)

    @property
    def phase(self):
        """Argument in (-pi, pi] (0 for the exact zero)."""
        return self.sign_phase

    def __pow__(self, exponent):
        if self.zero:
            if exponent <= 0:
                raise DomainError('non-positive power of an exact zero')
            return type(self).zero_value()
        return type(self)(self.log_modulus * exponent,
                          wrap_phase(self.sign_phase * exponent))

    @property
    def value(self):
        """Return the number itself (may overflow to inf)."""
        if self.zero:
            return 0.0
        modulus = math.exp(self.log_modulus)
        if self.sign_phase == 0.0:
            return modulus
        if self.sign_phase == math.pi:
            return -modulus
        return modulus * complex(math.cos(self.sign_phase),
                                 math.sin(self.sign_phase))

    def __mul__(self, other):
        if self.zero or other.zero:
            return type(self).zero_value()
        return type(self)(self.log_modulus + other.log_modulus,
                        wrap_phase(self.sign_phase + other.sign_phase))

    def __truediv__(self, other):
        if other.zero:
            raise DomainError('division by an exact zero')
        if self.zero:
            return type(self).zero_value()
        return type(self)(self.log_modulus - other.log_modulus,
                        wrap_phase(self.sign_phase - other.sign_phase))

    def __str__(self):
        if self.zero:
            return '0'
        return 'exp(%.15g)*exp(i*%.6g)' % (self.log_modulus, self.sign_phase)


def _real_log_value(log_modulus, sign):
    return LogValue(float(log_modulus), math.pi if sign < 0 else 0.0)


def log_gamma(x):
    """Return log Gamma(x) as LogValue (x real, off the poles)."""
    x = float(x)
    if is_nonpositive_integer(x):
        raise DomainError('Gamma has a pole at %g' % x)
    return _real_log_value(special.gammaln(x), special.gammasgn(x))


def _log_barnes_g_large(w):
    """Return log G(1+w) from the asymptotic expansion (w large)."""
    log_w = math.log(w)
    total = (0.5 * w * w * log_w - 0.75 * w * w + 0.5 * w * LOG_2PI
             - log_w / 12.0 + ZETA_PRIME_MINUS_1)
    w2 = w * w
    power = 1.0
    for k, bernoulli in enumerate(_BERNOULLI_EVEN, start=1):
        power *= w2
        total += bernoulli / (4.0 * k * (k + 1) * power)
    return total


def _log_barnes_g_positive(z):
    """Return log G(z) for real z > 0."""
    if z == round(z) and z <= _BARNES_INTEGER_MAX:
        # G(n) = 1! 2! ... (n-2)!
        return float(np.sum(special.gammaln(np.arange(2, int(z)))))
    if z - 1.0 >= _BARNES_SHIFT:
        return _log_barnes_g_large(z - 1.0)
    shift = int(math.ceil(_BARNES_SHIFT - (z - 1.0)))
    # G(z) = G(z + m) / (Gamma(z) Gamma(z+1) ... Gamma(z+m-1))
    steps = z + np.arange(shift)
    return (_log_barnes_g_large(z + shift - 1.0)
            - float(np.sum(special.gammaln(steps))))


def log_barnes_g(z, extend=False):
    """
    Return log G(z) as LogValue.

    By default only z > 0 is accepted.  With extend=True, negative
    non-integer z are reached by the functional equation (with sign) and
    nonpositive integers return the exact zero.
    """
    z = float(z)
    if z > 0:
        return LogValue(_log_barnes_g_positive(z))
    if not extend:
        raise DomainError('Barnes G evaluated at %g <= 0' % z)
    if is_nonpositive_integer(z):
        return LogValue.zero_value()
    shift = int(math.ceil(-z)) + 1
    steps = z + np.arange(shift)
    log_modulus = (_log_barnes_g_positive(z + shift)
                   - float(np.sum(special.gammaln(steps))))
    sign = float(np.prod(special.gammasgn(steps)))
    return _real_log_value(log_modulus, sign)


def barnes_g_ratio_asymptotic(a, b, n):
    """Return the large-n form of log G(n+1+a)/G(n+1+b)."""
    if n < 1:
        raise DomainError('n must be >= 1')
    log_n = math.log(n)
    return ((b - a) * n + 0.5 * (a - b) * LOG_2PI
            + ((a - b) * n + 0.5 * (a * a - b * b)) * log_n)


def _log_gamma_array(args):
    """Return (sum of log|Gamma|, product of signs) over args."""
    args = np.asarray(args, dtype=float)
    poles = (args <= 0) & (args == np.round(args))
    if np.any(poles):
        raise DomainError('Gamma pole at %g' % args[poles][0])
    return (float(np.sum(special.gammaln(args))),
            float(np.prod(special.gammasgn(args))))


def selberg_f(n, alpha, c):
    """Return f_n(alpha, c) = prod_{j<n} Gamma(alpha+jc+1)/Gamma(jc+1)."""
    if n < 0:
        raise DomainError('n must be >= 0')
    j = np.arange(n, dtype=float)
    num, num_sign = _log_gamma_array(alpha + j * c + 1.0)
    den, den_sign = _log_gamma_array(j * c + 1.0)
    return _real_log_value(num - den, num_sign * den_sign)


def _selberg_f_large(alpha, c, n):
    """Large-n form of log f_n(alpha, c) for a positive integer c."""
    log_n = math.log(n)
    value = (alpha * n * log_n + alpha * n * math.log(c) - alpha * n
             + 0.5 * alpha * LOG_2PI
             + (alpha * alpha - (c - 1) * alpha) / (2.0 * c) * log_n)
    for p in range(c):
        g_num = log_barnes_g(1.0 - p / c)
        g_den = log_barnes_g((alpha - p) / c + 1.0, extend=True)
        if g_den.zero:
            raise DomainError('Barnes G zero at %g' % ((alpha - p) / c + 1.0))
        value += g_num.log_modulus - g_den.log_modulus
    return value


def selberg_f_asymptotic(alpha, s, r, n):
    """Return the large-n form of log |f_{rn}(alpha, s/r)|."""
    if s < 1 or r < 1 or math.gcd(s, r) != 1:
        raise DomainError('need coprime s, r >= 1 (got %d, %d)' % (s, r))
    value = 0.0
    for nu in range(r):
        shift = s * nu / r
        value += (_selberg_f_large(alpha + shift, s, n)
                  - _selberg_f_large(shift, s, n))
    return value


def _barnes_product(numerators, denominators):
    """Return prod G(num) / prod G(den) as LogValue."""
    result = LogValue(0.0)
    for z in numerators:
        result = result * log_barnes_g(z, extend=True)
    for z in denominators:
        g = log_barnes_g(z, extend=True)
        if g.zero:
            raise DomainError('Barnes G pole in denominator at %g' % z)
        result = result / g
    return result


def morris_m(n, a, b):
    """Return the Morris integral M_n(a, b) as LogValue."""
    return _barnes_product(
        (n + 1 + a + b, 1 + a, 1 + b, n + 2),
        (1 + a + b, n + 1 + a, n + 1 + b))


def jacobi_norm(n, a, b):
    """Return H_{n,a,b}[1], the Jacobi-weight normalization on [0, 1]."""
    if a <= -1 or b <= -1:
        raise DomainError('Jacobi exponents must exceed -1')
    return _barnes_product(
        (n + 1 + a, n + 1 + b, n + 1 + a + b, n + 2),
        (1 + a, 1 + b, 2 * n + 1 + a + b))


def cbeta_norm(n, beta):
    """Return C_{n,beta} = Gamma(n beta/2 + 1) / Gamma(beta/2 + 1)^n."""
    if beta <= 0:
        raise DomainError('beta must be positive')
    return LogValue(float(special.gammaln(n * beta / 2.0 + 1.0)
                          - n * special.gammaln(beta / 2.0 + 1.0)))


def gaussian_norm(n, scale=1.0):
    """
    Return G_{n,a}[1] for the weight exp(-a^2 x^2), a = scale.

    n may be non-integer; the closed form provides the continuation.
    """
    if scale <= 0:
        raise DomainError('Gaussian scale must be positive')
    log_g = log_barnes_g(n + 2)
    return LogValue(-0.5 * n * (n - 1) * math.log(2.0)
                    + 0.5 * n * math.log(math.pi) + log_g.log_modulus
                    - n * n * math.log(scale))


def laguerre_norm(n, c, aprime):
    """Return L~_{n,c}[1] for the weight x^(a'-1/2) exp(-c x) on (0, inf)."""
    if c <= 0:
        raise DomainError('Laguerre rate c must be positive')
    if aprime + 0.5 <= 0:
        raise DomainError("need a' - 1/2 > -1")
    return LogValue(
        -(n * n + n * (aprime - 0.5)) * math.log(c)
        + log_barnes_g(n + 2).log_modulus
        + log_barnes_g(aprime + n + 0.5).log_modulus
        - log_barnes_g(aprime + 0.5).log_modulus)
