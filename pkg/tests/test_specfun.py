# -*- coding: utf-8 -*-
#
# test_specfun.py - tests of the special-function building blocks
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

import mpmath
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import integrate, special

from fhlab.lab import specfun
from fhlab.lab.errors import DomainError
from fhlab.lab.specfun import LogValue


def test_log_value_arithmetic():
    two = LogValue.from_number(2.0)
    minus_three = LogValue.from_number(-3.0)
    assert minus_three.phase == pytest.approx(math.pi)
    assert_allclose((two * minus_three).value, -6.0)
    assert_allclose((minus_three / two).value, -1.5)
    assert_allclose((two ** 3).value, 8.0)
    assert_allclose(LogValue.from_log(complex(0.0, math.pi / 2)).value, 1j,
                    atol=1e-15)


def test_log_value_zero():
    zero = LogValue.from_number(0)
    assert zero.zero
    assert (zero * LogValue(5.0)).zero
    assert zero.value == 0.0
    with pytest.raises(DomainError):
        LogValue(1.0) / zero
    with pytest.raises(DomainError):
        zero ** -1


def test_wrap_phase_range():
    for phase in (-math.pi, math.pi, 3 * math.pi, -7.5, 0.25):
        wrapped = specfun.wrap_phase(phase)
        assert -math.pi < wrapped <= math.pi
        assert_allclose(math.cos(wrapped), math.cos(phase), atol=1e-12)


def test_log_gamma_trivial():
    assert specfun.log_gamma(1).log_modulus == pytest.approx(0.0, abs=1e-15)
    assert_allclose(specfun.log_gamma(0.5).log_modulus,
                    0.5 * math.log(math.pi), rtol=1e-14)


@pytest.mark.parametrize('x', [1e-3, 0.37, 10.3, 123.456, 1e6])
def test_log_gamma_against_mpmath(x):
    expected = float(mpmath.loggamma(mpmath.mpf(x)))
    assert_allclose(specfun.log_gamma(x).log_modulus, expected, rtol=1e-13,
                    atol=1e-15)


def test_log_gamma_negative_and_poles():
    value = specfun.log_gamma(-0.5)
    assert_allclose(value.value, -2.0 * math.sqrt(math.pi), rtol=1e-13)
    for pole in (0, -1, -4):
        with pytest.raises(DomainError):
            specfun.log_gamma(pole)


def test_log_barnes_g_integers():
    assert specfun.log_barnes_g(1).log_modulus == pytest.approx(0.0)
    assert specfun.log_barnes_g(2).log_modulus == pytest.approx(0.0)
    assert_allclose(specfun.log_barnes_g(4).log_modulus, math.log(2.0))
    # G(6) = 1! 2! 3! 4! = 288
    assert_allclose(specfun.log_barnes_g(6).log_modulus, math.log(288.0))


@pytest.mark.parametrize('z', [0.5, 1.5, 2.5, 7.0, 12.25, 30.75])
def test_log_barnes_g_functional_equation(z):
    step = (specfun.log_barnes_g(z + 1).log_modulus
            - specfun.log_barnes_g(z).log_modulus)
    assert_allclose(step, float(special.gammaln(z)), rtol=1e-12, atol=1e-13)


@pytest.mark.parametrize('z', [0.25, 1.5, 3.7, 13.2, 41.9])
def test_log_barnes_g_against_mpmath(z):
    with mpmath.workdps(30):
        expected = float(mpmath.log(mpmath.barnesg(mpmath.mpf(z))))
    assert_allclose(specfun.log_barnes_g(z).log_modulus, expected,
                    rtol=1e-12, atol=1e-12)


def test_log_barnes_g_extended():
    with pytest.raises(DomainError):
        specfun.log_barnes_g(-0.5)
    assert specfun.log_barnes_g(0.0, extend=True).zero
    assert specfun.log_barnes_g(-3.0, extend=True).zero
    for z in (-0.5, -1.25, -2.7):
        expected = float(mpmath.barnesg(mpmath.mpf(z)))
        assert_allclose(specfun.log_barnes_g(z, extend=True).value, expected,
                        rtol=1e-11)


def test_barnes_g_ratio_asymptotic():
    assert specfun.barnes_g_ratio_asymptotic(1.0, 1.0, 10) == 0.0
    errors = []
    for n in (50, 100, 400):
        exact = (specfun.log_barnes_g(n + 1.5).log_modulus
                 - specfun.log_barnes_g(n + 1.0).log_modulus)
        errors.append(abs(specfun.barnes_g_ratio_asymptotic(0.5, 0.0, n)
                          - exact))
    assert errors[0] > errors[1] > errors[2]
    assert errors[2] < 1e-3
    exact = (specfun.log_barnes_g(102.0).log_modulus
             - specfun.log_barnes_g(101.0).log_modulus)
    assert abs(specfun.barnes_g_ratio_asymptotic(1.0, 0.0, 100)
               - exact) < 1e-2


def test_selberg_f_trivial():
    assert specfun.selberg_f(7, 0.0, 1.5).log_modulus == pytest.approx(0.0)
    assert_allclose(specfun.selberg_f(1, 2.3, 0.7).log_modulus,
                    float(special.gammaln(3.3)))
    assert_allclose(specfun.selberg_f(2, 2.0, 1.0).log_modulus,
                    math.log(12.0))


def test_selberg_f_step():
    n, alpha, c = 9, 0.8, 1.5
    step = (specfun.selberg_f(n + 1, alpha, c).log_modulus
            - specfun.selberg_f(n, alpha, c).log_modulus)
    assert_allclose(step, float(special.gammaln(alpha + n * c + 1)
                                - special.gammaln(n * c + 1)), rtol=1e-12)


def test_selberg_f_pole():
    with pytest.raises(DomainError):
        specfun.selberg_f(3, -2.0, 1.0)


def test_selberg_f_asymptotic():
    assert specfun.selberg_f_asymptotic(0.0, 1, 1, 20) == pytest.approx(0.0)
    # f_n(1, 1) = n!
    error40 = abs(specfun.selberg_f_asymptotic(1.0, 1, 1, 40)
                  - specfun.selberg_f(40, 1.0, 1.0).log_modulus)
    error80 = abs(specfun.selberg_f_asymptotic(1.0, 1, 1, 80)
                  - specfun.selberg_f(80, 1.0, 1.0).log_modulus)
    assert error40 < 5e-3
    assert error80 < error40


def test_selberg_f_asymptotic_rational():
    errors = [abs(specfun.selberg_f_asymptotic(0.75, 1, 2, n)
                  - specfun.selberg_f(2 * n, 0.75, 0.5).log_modulus)
              for n in (30, 60)]
    assert errors[1] < errors[0]
    assert errors[1] < 0.05
    with pytest.raises(DomainError):
        specfun.selberg_f_asymptotic(1.0, 2, 4, 10)


def test_morris_m():
    assert specfun.morris_m(1, 0.0, 0.0).log_modulus == pytest.approx(0.0)
    assert_allclose(specfun.morris_m(1, 1.0, 1.0).value, 2.0)
    rng = np.random.default_rng(7)
    for a, b in rng.uniform(0.0, 3.0, size=(5, 2)):
        expected = (special.gammaln(1 + a + b) - special.gammaln(1 + a)
                    - special.gammaln(1 + b))
        assert_allclose(specfun.morris_m(1, a, b).log_modulus, expected,
                        rtol=1e-12, atol=1e-12)


def test_morris_m_quadrature():
    a, b = 1.0, 0.0

    def integrand(x1, x2):
        z1, z2 = np.exp(2j * np.pi * x1), np.exp(2j * np.pi * x2)
        value = (np.exp(1j * np.pi * (a - b) * (x1 + x2))
                 * abs(1 + z1) ** (a + b) * abs(1 + z2) ** (a + b)
                 * abs(z1 - z2) ** 2)
        return value.real
    expected, _ = integrate.dblquad(integrand, -0.5, 0.5, -0.5, 0.5)
    assert_allclose(specfun.morris_m(2, a, b).value, expected, rtol=1e-7)


def test_jacobi_norm():
    assert specfun.jacobi_norm(1, 0.0, 0.0).log_modulus == \
        pytest.approx(0.0)
    assert_allclose(specfun.jacobi_norm(1, 1.0, 0.0).value, 0.5)
    expected, _ = integrate.dblquad(lambda y, x: (x - y) ** 2, 0, 1, 0, 1)
    assert_allclose(specfun.jacobi_norm(2, 0.0, 0.0).value, expected,
                    rtol=1e-8)
    with pytest.raises(DomainError):
        specfun.jacobi_norm(2, -1.0, 0.0)


def test_cbeta_norm():
    assert specfun.cbeta_norm(1, 3.3).log_modulus == pytest.approx(0.0)
    assert_allclose(specfun.cbeta_norm(2, 2.0).value, 2.0)
    assert_allclose(specfun.cbeta_norm(3, 4.0).value, 90.0)
    with pytest.raises(DomainError):
        specfun.cbeta_norm(3, 0.0)


def test_gaussian_norm():
    assert_allclose(specfun.gaussian_norm(1).log_modulus,
                    0.5 * math.log(math.pi))

    def integrand(y, x):
        return (x - y) ** 2 * math.exp(-x * x - y * y)
    expected, _ = integrate.dblquad(integrand, -np.inf, np.inf, -np.inf,
                                    np.inf)
    assert_allclose(specfun.gaussian_norm(2).value, expected, rtol=1e-7)
    # scaling x -> x / a
    assert_allclose(specfun.gaussian_norm(3, 2.0).log_modulus,
                    specfun.gaussian_norm(3).log_modulus - 9 * math.log(2.0))


def test_laguerre_norm():
    assert_allclose(specfun.laguerre_norm(1, 1.0, 1.0).value,
                    math.sqrt(math.pi) / 2.0)
    for aprime, c in ((0.5, 1.0), (2.0, 3.0)):
        expected = (special.gammaln(aprime + 0.5)
                    - (aprime + 0.5) * math.log(c))
        assert_allclose(specfun.laguerre_norm(1, c, aprime).log_modulus,
                        expected, rtol=1e-12, atol=1e-14)

    # 2 (m0 m2 - m1^2) with m_k = Gamma(k + 3/2)
    moments = special.gamma(np.arange(3) + 1.5)
    expected = 2.0 * (moments[0] * moments[2] - moments[1] ** 2)
    assert_allclose(specfun.laguerre_norm(2, 1.0, 1.0).value, expected,
                    rtol=1e-12)
    with pytest.raises(DomainError):
        specfun.laguerre_norm(2, 0.0, 1.0)
