# -*- coding: utf-8 -*-
#
# determinants.py - Toeplitz, Toeplitz+Hankel and moment-Hankel determinants
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

"""Exact finite-size determinants in log space, double or extended."""

import logging
import math
import warnings

from dataclasses import dataclass, replace

import mpmath
import numpy as np
from scipy import integrate, linalg

from fhlab.lab.errors import DeterminantError, DomainError
from fhlab.lab.specfun import LogValue, wrap_phase

log = logging.getLogger(__name__)

TIER_DOUBLE = 'double'
TIER_EXTENDED = 'extended'
TIERS = (TIER_DOUBLE, TIER_EXTENDED)

PIVOTING_PARTIAL = 'partial'
PIVOTING_NONE = 'none'

# Toeplitz+Hankel variants: (sign, shift) of det[g_{j-k} + sign g_{j+k+shift}]
OPLUS_ODD = 'O+(2N+1)'
OMINUS_ODD = 'O-(2N+1)'
OPLUS_EVEN = 'O+(2N)'
SP = 'Sp(N)'
TOEPLITZ_HANKEL_VARIANTS = {
    OPLUS_ODD: (-1.0, 1),
    OMINUS_ODD: (1.0, 1),
    OPLUS_EVEN: (1.0, 0),
    SP: (-1.0, 2),
}

# beyond this size moment matrices are only trusted at extended precision
HANKEL_DOUBLE_MAX = 8

_QUAD_OPTIONS = {'epsabs': 0.0, 'epsrel': 1e-12, 'limit': 400}


class LogDet(LogValue):
    """Determinant value as log modulus, phase and exact-zero flag."""


@dataclass(frozen=True)
class PrecisionContext:
    """Arithmetic tier for determinants and moments."""

    tier: str = TIER_DOUBLE
    dps: int = 30
    pivoting: str = PIVOTING_PARTIAL
    hankel_extra_dps: int = 2

    def __post_init__(self):
        if self.tier not in TIERS:
            raise DomainError('unknown precision tier "%s"' % self.tier)
        if self.tier == TIER_EXTENDED and self.dps < 30:
            raise DomainError('extended tier needs at least 30 digits')
        if self.pivoting not in (PIVOTING_PARTIAL, PIVOTING_NONE):
            raise DomainError('unknown pivoting policy "%s"' % self.pivoting)

    @property
    def extended(self):
        """True for the mpmath tier."""
        return self.tier == TIER_EXTENDED

    def with_dps(self, dps):
        """Return an extended context with at least dps digits."""
        return replace(self, tier=TIER_EXTENDED, dps=max(self.dps, dps, 30))


def hankel_context(ctx, n):
    """Return the context a size-n moment determinant must run in."""
    if n <= HANKEL_DOUBLE_MAX and not ctx.extended:
        return ctx
    target = max(ctx.dps, 30) + ctx.hankel_extra_dps * n
    if not ctx.extended:
        log.debug('hankel size %d promoted to extended precision (%d dps)',
                  n, target)
    return ctx.with_dps(target)


def _logdet_lu(matrix):
    """Return LogDet of a numpy matrix by LU with partial pivoting."""
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', linalg.LinAlgWarning)
        lu, piv = linalg.lu_factor(matrix, check_finite=True)
    diag = np.diag(lu)
    if np.any(diag == 0):
        return LogDet.zero_value()
    swaps = int(np.count_nonzero(piv != np.arange(len(piv))))
    phase = float(np.sum(np.angle(diag))) + math.pi * (swaps % 2)
    return LogDet(float(np.sum(np.log(np.abs(diag)))), wrap_phase(phase))


def _logdet_no_pivoting(matrix):
    """Return LogDet by elimination in the natural order."""
    work = np.array(matrix, dtype=complex if np.iscomplexobj(matrix)
                    else float)
    size = len(work)
    log_modulus = 0.0
    phase = 0.0
    for col in range(size):
        pivot = work[col, col]
        if pivot == 0:
            raise DeterminantError('zero pivot at row %d without pivoting'
                                   % col)
        log_modulus += math.log(abs(pivot))
        phase += float(np.angle(pivot))
        factors = work[col + 1:, col] / pivot
        work[col + 1:, col:] -= np.outer(factors, work[col, col:])
    return LogDet(log_modulus, wrap_phase(phase))


def _to_mp(value):
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return value
    value = complex(value)
    if value.imag == 0:
        return mpmath.mpf(value.real)
    return mpmath.mpc(value.real, value.imag)


def _logdet_mp(entries, ctx):
    """Return LogDet of a square array of entries with mpmath."""
    size = len(entries)
    with mpmath.mp.workdps(ctx.dps):
        matrix = mpmath.matrix(size, size)
        for j in range(size):
            for k in range(size):
                matrix[j, k] = _to_mp(entries[j][k])
        value = mpmath.det(matrix)
        if value == 0:
            return LogDet.zero_value()
        return LogDet(float(mpmath.log(abs(value))),
                      wrap_phase(float(mpmath.arg(value))))


def dense_logdet(matrix, ctx):
    """Return LogDet of a square matrix (numpy array or nested list)."""
    size = len(matrix)
    if size == 0:
        return LogDet(0.0)
    if ctx.extended:
        return _logdet_mp(matrix, ctx)
    matrix = np.asarray(matrix)
    if matrix.dtype == complex and not np.any(matrix.imag):
        matrix = matrix.real
    if ctx.pivoting == PIVOTING_NONE:
        return _logdet_no_pivoting(matrix)
    return _logdet_lu(matrix)


def _check_order(table, needed):
    if table.order < needed:
        raise DeterminantError('coefficient table covers |k| <= %d, need %d'
                               % (table.order, needed))


def toeplitz_matrix(table, n):
    """Return the n x n matrix [g_{j-k}]."""
    _check_order(table, n - 1)
    index = np.subtract.outer(np.arange(n), np.arange(n))
    return table[index]


def toeplitz_logdet(table, n, ctx=PrecisionContext()):
    """Return D_n = det[g_{j-k}]_{j,k<n}."""
    if n < 0:
        raise DomainError('determinant size must be >= 0')
    return dense_logdet(toeplitz_matrix(table, n), ctx)


def toeplitz_hankel_matrix(variant, table, size):
    """Return [g_{j-k} + sign g_{j+k+shift}]_{j,k<size} for a variant."""
    if variant not in TOEPLITZ_HANKEL_VARIANTS:
        raise DomainError('unknown Toeplitz+Hankel variant "%s"' % variant)
    if not table.is_even():
        raise DeterminantError('%s determinant needs an even symbol'
                               % variant)
    sign, shift = TOEPLITZ_HANKEL_VARIANTS[variant]
    _check_order(table, max(size - 1, 2 * size - 2 + shift))
    rows = np.arange(size)
    return (table[np.subtract.outer(rows, rows)]
            + sign * table[np.add.outer(rows, rows) + shift])


def toeplitz_hankel_logdet(variant, table, N, ctx=PrecisionContext()):
    """
    Return the N x N Toeplitz+Hankel determinant of a variant.

    The O+(2N) value is the raw determinant; the group average is half
    of it (see ensembles.group_average).
    """
    if N < 0:
        raise DomainError('determinant size must be >= 0')
    return dense_logdet(toeplitz_hankel_matrix(variant, table, N), ctx)


#
# moment-Hankel determinants
#


@dataclass(frozen=True)
class GaussWeight:
    """exp(-a^2 x^2) on the real line."""

    scale: float = 1.0

    support = (-math.inf, math.inf)

    def __post_init__(self):
        if self.scale <= 0:
            raise DomainError('Gaussian scale must be positive')

    def edge_powers(self):
        return 0.0, 0.0

    def regular(self, x):
        return mpmath.exp(-(self.scale * x) ** 2)

    def padding(self):
        return 4.0 / self.scale


@dataclass(frozen=True)
class LaguerreWeight:
    """x^(a'-1/2) exp(-c x) on (0, inf)."""

    rate: float
    aprime: float

    support = (0.0, math.inf)

    def __post_init__(self):
        if self.rate <= 0:
            raise DomainError('Laguerre rate must be positive')
        if self.aprime - 0.5 <= -1:
            raise DomainError("Laguerre weight needs a' - 1/2 > -1")

    def edge_powers(self):
        return self.aprime - 0.5, 0.0

    def regular(self, x):
        return mpmath.exp(-self.rate * x)

    def padding(self):
        return 8.0 / self.rate


@dataclass(frozen=True)
class JacobiWeight:
    """x^a (1-x)^b on (0, 1)."""

    a: float
    b: float

    support = (0.0, 1.0)

    def __post_init__(self):
        if self.a <= -1 or self.b <= -1:
            raise DomainError('Jacobi exponents must exceed -1')

    def edge_powers(self):
        return self.a, self.b

    def regular(self, x):
        return 1

    def padding(self):
        return 0.0


@dataclass(frozen=True, eq=False)
class MomentTable:
    """Moments mu_0..mu_kmax as python numbers or mpmath values."""

    values: tuple
    dps: int = 0

    def __getitem__(self, k):
        return self.values[k]

    @property
    def kmax(self):
        return len(self.values) - 1

    def rows(self):
        """Return (k, re, im) rows for CSV output."""
        rows = []
        for k, value in enumerate(self.values):
            value = complex(value)
            rows.append((k, value.real, value.imag))
        return rows


def _check_points(weight, points, powers):
    lo, hi = weight.support
    for point, power in zip(points, powers):
        if power <= -1:
            raise DomainError('|x - %g|^%g is not integrable' % (point, power))
        if not lo <= point <= hi:
            raise DomainError('point %g outside the weight support' % point)


def _breakpoints(weight, points):
    lo, hi = weight.support
    inner = sorted(set(float(y) for y in points if lo < y < hi))
    pad = weight.padding()
    if math.isinf(lo):
        anchor = inner[0] if inner else 0.0
        inner = [anchor - pad] + inner
    if math.isinf(hi):
        anchor = inner[-1] if inner else max(lo, 0.0)
        inner = inner + [anchor + pad]
    return [lo] + inner + [hi]


def _endpoint_power(x, weight, points, powers):
    """Return the algebraic exponent sitting at x (weight edge or point)."""
    total = 0.0
    lo, hi = weight.support
    edge_lo, edge_hi = weight.edge_powers()
    if x == lo:
        total += edge_lo
    if x == hi:
        total += edge_hi
    for point, power in zip(points, powers):
        if point == x:
            total += power
    return total


def _integrand_mp(k, weight, points, powers, smooth, skip=()):
    """
    Return the moment integrand.  Algebraic factors anchored at a value
    in skip are left out; the quadrature weight carries them instead.
    """
    lo, hi = weight.support
    edge_lo, edge_hi = weight.edge_powers()
    if lo in skip:
        edge_lo = 0
    if hi in skip:
        edge_hi = 0
    factors = tuple((point, power) for point, power in zip(points, powers)
                    if point not in skip)

    def func(x):
        value = x ** k * weight.regular(x)
        if edge_lo and not math.isinf(lo):
            value *= (x - lo) ** edge_lo
        if edge_hi and not math.isinf(hi):
            value *= (hi - x) ** edge_hi
        for point, power in factors:
            value *= abs(x - point) ** power
        if smooth is not None:
            value *= smooth(x)
        return value
    return func


def _quad_piece(func, left, right, left_power, right_power):
    """
    Return the integral of func over one piece with scipy, with
    (x - left)^left_power (right - x)^right_power as the QAWS weight.
    """
    if math.isinf(left) or math.isinf(right) or \
            (left_power == 0 and right_power == 0):
        return integrate.quad(func, left, right, **_QUAD_OPTIONS)[0]
    return integrate.quad(func, left, right, weight='alg',
                          wvar=(left_power, right_power),
                          **_QUAD_OPTIONS)[0]


def _sample_point(breaks):
    for left, right in zip(breaks[:-1], breaks[1:]):
        if not math.isinf(left) and not math.isinf(right):
            return 0.5 * (left + right)
    return 0.5


def _moment_double(k, weight, points, powers, smooth, breaks):
    sample = _integrand_mp(k, weight, points, powers, smooth)(
        mpmath.mpf(_sample_point(breaks)))
    complex_valued = smooth is not None and complex(sample).imag != 0
    total = 0j if complex_valued else 0.0
    for left, right in zip(breaks[:-1], breaks[1:]):
        func = _integrand_mp(k, weight, points, powers, smooth,
                             skip=(left, right))
        args = (left, right,
                _endpoint_power(left, weight, points, powers),
                _endpoint_power(right, weight, points, powers))
        total += _quad_piece(
            lambda x: float(mpmath.re(func(mpmath.mpf(x)))), *args)
        if complex_valued:
            total += 1j * _quad_piece(
                lambda x: float(mpmath.im(func(mpmath.mpf(x)))), *args)
    return total


def weighted_moments(weight, kmax, ctx=PrecisionContext(), points=(),
                     powers=(), smooth=None):
    """
    Return the MomentTable of

        mu_k = int x^k prod_r |x - y_r|^{p_r} smooth(x) w(x) dx

    for k <= kmax, with p_r = 2 q_r > -1.  smooth is called with mpmath
    numbers and may return complex values.
    """
    points = tuple(float(y) for y in points)
    powers = tuple(float(p) for p in powers)
    if len(points) != len(powers):
        raise DomainError('each point needs one exponent')
    _check_points(weight, points, powers)
    breaks = _breakpoints(weight, points)
    if ctx.extended:
        values = []
        with mpmath.mp.workdps(ctx.dps):
            mp_breaks = [mpmath.mpf(b) if not math.isinf(b)
                         else (mpmath.inf if b > 0 else -mpmath.inf)
                         for b in breaks]
            for k in range(kmax + 1):
                func = _integrand_mp(k, weight, points, powers, smooth)
                values.append(+mpmath.quad(func, mp_breaks))
        return MomentTable(tuple(values), ctx.dps)
    with mpmath.mp.workdps(15):
        values = tuple(_moment_double(k, weight, points, powers, smooth,
                                      breaks)
                       for k in range(kmax + 1))
    return MomentTable(values, 0)


def hankel_logdet(moments, n, ctx=PrecisionContext()):
    """Return det[mu_{j+k}]_{j,k<n} (without the n! of Andreief's identity)."""
    if n < 0:
        raise DomainError('determinant size must be >= 0')
    if moments.kmax < 2 * n - 2:
        raise DeterminantError('moment table stops at k=%d, need %d'
                               % (moments.kmax, 2 * n - 2))
    ctx = hankel_context(ctx, n)
    if ctx.extended and moments.dps < ctx.dps:
        log.debug('moments carry %d dps, determinant runs at %d',
                  moments.dps, ctx.dps)
    entries = [[moments[j + k] for k in range(n)] for j in range(n)]
    if not ctx.extended:
        entries = np.array([[complex(v) for v in row] for row in entries])
    return dense_logdet(entries, ctx)
