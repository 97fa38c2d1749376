# -*- coding: utf-8 -*-
#
# test_asymptotics.py - tests of the asymptotic predictors
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
from numpy.polynomial import Polynomial
from numpy.testing import assert_allclose

from fhlab.lab import asymptotics, ensembles, symbols
from fhlab.lab.asymptotics import Prediction
from fhlab.lab.ensembles import EnsembleId
from fhlab.lab.errors import DegenerateError, DomainError, SymbolError
from fhlab.lab.specfun import selberg_f
from fhlab.lab.symbols import FHSymbol, Singularity


def two_t_cos(t):
    return symbols.smooth_log_coeffs(lambda theta: 2 * t * np.cos(theta), 8)


def single(q, b=0.0, theta=math.pi):
    return FHSymbol(singularities=(Singularity(theta, q, b),))


def test_prediction_value():
    prediction = Prediction(coeff_n=0.5, coeff_logn=-0.25,
                            log_constant=0.1)
    assert_allclose(prediction.log_value(4).real,
                    2.0 - 0.25 * math.log(4) + 0.1)
    assert_allclose(prediction.evaluate(4).log_modulus,
                    prediction.log_value(4).real)
    assert 'fisher-hartwig' in str(prediction)
    with pytest.raises(DomainError):
        prediction.log_value(0)
    degenerate = Prediction(0, 0, 0, degenerate=True)
    assert str(degenerate).endswith('degenerate')
    with pytest.raises(DegenerateError):
        degenerate.evaluate(10)


def test_szego_prediction():
    t = 0.6
    prediction = asymptotics.predict_szego(two_t_cos(t))
    assert prediction.formula == asymptotics.FORMULA_SZEGO
    assert abs(prediction.coeff_n) < 1e-15
    assert_allclose(prediction.log_constant, t * t)
    shifted = two_t_cos(t) + symbols.FourierSeries.from_terms({0: 0.2})
    assert_allclose(asymptotics.predict_szego(shifted).log_value(10),
                    2.0 + t * t)


@pytest.mark.parametrize('q, b', [(0.5, 0.0), (0.3, 0.2), (1.0, -0.4)])
def test_fh_single_singularity_against_closed_form(q, b):
    prediction = asymptotics.predict_fh(single(q, b))
    assert prediction.coeff_logn == pytest.approx(q * q - b * b)
    assert prediction.proved_regime
    n = 2000
    exact = selberg_f(n, 2 * q, 1.0) / (selberg_f(n, q + b, 1.0)
                                        * selberg_f(n, q - b, 1.0))
    assert abs(prediction.log_value(n).real - exact.log_modulus) < 1e-3


def test_fh_against_toeplitz():
    sym = FHSymbol(two_t_cos(0.2), (Singularity(1.0, 0.3),
                                    Singularity(-1.0, 0.3)))
    prediction = asymptotics.predict_fh(sym)
    assert not prediction.proved_regime
    n = 64
    exact = ensembles.group_average(EnsembleId.unitary(n), sym)
    ratio = math.exp(exact.log_modulus - prediction.log_value(n).real)
    assert ratio == pytest.approx(1.0, abs=0.03)


def test_fh_degenerate():
    # 1 + a - b = 0
    prediction = asymptotics.predict_fh(single(0.5, 1.5))
    assert prediction.degenerate
    assert asymptotics.is_degenerate(Singularity(0.0, 0.0, -1.0))
    assert not asymptotics.is_degenerate(Singularity(0.0, 0.25, -0.75))


def test_ising_critical_matches_fh():
    alpha1 = 0.3
    fh = asymptotics.predict_fh(symbols.ising_row_symbol(alpha1, 1.0))
    closed = asymptotics.ising_critical_closed_form(alpha1)
    for n in (5, 50):
        assert_allclose(fh.log_value(n).real, closed.log_value(n).real,
                        rtol=1e-10)
    with pytest.raises(DomainError):
        asymptotics.ising_critical_closed_form(1.0)


def test_ising_highT_matches_closed_form():
    alpha1, alpha2 = 0.3, 2.0
    fh = asymptotics.predict_ising_highT(alpha1, alpha2)
    closed = asymptotics.ising_highT_closed_form(alpha1, alpha2)
    assert fh.coeff_logn == pytest.approx(-0.5)
    assert_allclose(fh.coeff_n.real, -math.log(alpha2))
    for n in (4, 40):
        assert_allclose(fh.log_value(n).real, closed.log_value(n).real,
                        rtol=1e-10)
        assert math.cos(fh.log_value(n).imag) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        asymptotics.ising_highT_closed_form(0.6, 2.0)


def test_naive_highT_symbol_is_degenerate():
    prediction = asymptotics.predict_fh(symbols.ising_row_symbol(0.3, 2.0))
    assert prediction.degenerate


def test_beta_two_reduces_to_fh():
    sym = FHSymbol(two_t_cos(0.25), (Singularity(0.7, 0.4, 0.1),
                                     Singularity(-2.0, 0.3)))
    beta = asymptotics.predict_beta_fh(sym, 2.0)
    fh = asymptotics.predict_fh(sym)
    assert_allclose(beta.log_value(30), fh.log_value(30), rtol=1e-12)
    assert beta.n_convention.endswith('2*1/1')


@pytest.mark.parametrize('beta', [1.0, 4.0])
def test_beta_fh_against_selberg(beta):
    q, b = 0.5, 0.25
    c = beta / 2.0
    prediction = asymptotics.predict_beta_fh(single(q, b), beta)
    n = 1000
    exact = (selberg_f(n, 2 * c * q, c).log_modulus
             - selberg_f(n, c * (q + b), c).log_modulus
             - selberg_f(n, c * (q - b), c).log_modulus)
    assert abs(prediction.log_value(n).real - exact) < 5e-3


def test_beta_fh_checks():
    with pytest.raises(DomainError):
        asymptotics.predict_beta_fh(single(0.5), math.sqrt(2.0))
    with pytest.raises(DomainError):
        asymptotics.predict_beta_fh(single(0.5), 2.0, s=2, r=2)
    with pytest.raises(DomainError):
        asymptotics.predict_beta_fh(single(-0.4), 4.0)
    assert asymptotics.log_a_qb(0.0, 0.0, 2, 1) == pytest.approx(0.0)


@pytest.mark.parametrize('kind', sorted(ensembles.GROUP_LAMBDAS))
def test_cn_lambda_smooth_groups(kind):
    N = 10
    sym = FHSymbol(two_t_cos(0.3) + symbols.FourierSeries.from_terms(
        {2: 0.1, -2: 0.1}))
    lambda1, lambda2 = ensembles.GROUP_LAMBDAS[kind]
    prediction = asymptotics.predict_cn_lambda(sym, lambda1 - 0.5,
                                               lambda2 - 0.5)
    exact = ensembles.group_average(EnsembleId(kind, N), sym)
    assert_allclose(exact.log_modulus, prediction.log_value(N).real,
                    rtol=1e-8, atol=1e-10)


def test_toeplitz_hankel_prediction():
    sym = symbols.cosine_pair_symbol([1.0], 0.5, smooth_log=two_t_cos(0.2))
    prediction = asymptotics.predict_toeplitz_hankel(sym)
    same = asymptotics.predict_cn_lambda(sym, 0.5, -0.5)
    assert_allclose(prediction.log_value(7), same.log_value(7))
    assert prediction.coeff_logn == pytest.approx(0.25)
    N = 48
    exact = ensembles.group_average(EnsembleId.orthogonal_minus_odd(N), sym)
    ratio = math.exp(exact.log_modulus - prediction.log_value(N).real)
    assert ratio == pytest.approx(1.0, abs=0.03)


def test_toeplitz_hankel_checks():
    with pytest.raises(SymbolError):
        asymptotics.predict_toeplitz_hankel(single(0.5, theta=1.0))
    with pytest.raises(DomainError):
        asymptotics.predict_toeplitz_hankel(single(0.5, theta=0.0))


def test_johansson_gue():
    # a(x) = x: Var(sum x) = 1/4 at weight exp(-2N x^2)
    mean, variance = asymptotics.johansson_gue(Polynomial([0.0, 1.0]))
    assert mean == pytest.approx(0.0, abs=1e-15)
    assert variance == pytest.approx(1.0 / 8.0)
    mean, variance = asymptotics.johansson_gue([0.0, 0.0, 1.0])
    assert mean == pytest.approx(0.25)
    assert asymptotics.johansson_gue(None) == (0.0, 0.0)


@pytest.mark.parametrize('aprime', [0.0, 0.5, 1.0, 2.5])
def test_johansson_lue_quadratic(aprime):
    # a(x) = s x^2 is exact: -(N^2 + N(a'-1/2)) log(1 - s/4N)
    s = 0.8
    mean, constant = asymptotics.johansson_lue([0.0, 0.0, s], aprime)
    assert mean == pytest.approx(s / 4)
    assert constant == pytest.approx((aprime - 0.5) * s / 4 + s * s / 32)


def test_johansson_lue_constant_and_split():
    mean, constant = asymptotics.johansson_lue([1.5], 0.75)
    assert mean == pytest.approx(1.5)
    assert constant == pytest.approx(0.0, abs=1e-14)
    # the a' = 0 and a' = 1 halves of a Gaussian average of twice the size
    poly = [0.1, 0.0, -0.3, 0.0, 0.2]
    _, variance = asymptotics.johansson_gue(poly)
    total = asymptotics.johansson_lue(poly, 0.0)[1] + \
        asymptotics.johansson_lue(poly, 1.0)[1]
    assert total == pytest.approx(variance, rel=1e-12)
    odd = [0.1, 0.4, -0.3]
    assert asymptotics.johansson_lue(odd, 0.0)[0] == \
        pytest.approx(asymptotics.johansson_lue(odd, 2.0)[0])


def test_hankel_predictions_checks():
    with pytest.raises(DomainError):
        asymptotics.predict_hankel_gue((1.2,), (0.5,))
    with pytest.raises(DomainError):
        asymptotics.predict_hankel_gue((0.2, 0.2), (0.5, 0.5))
    with pytest.raises(DomainError):
        asymptotics.predict_hankel_gue((0.2,), (-0.5,))
    with pytest.raises(DomainError):
        asymptotics.predict_hankel_lue((0.5,), (0.5,), -0.5)
    gue = asymptotics.predict_hankel_gue((0.3,), (1.0,))
    assert gue.coeff_logn == 0.0
    assert_allclose(gue.coeff_n.real, 2 * 0.09)
    lue = asymptotics.predict_hankel_lue((0.5,), (0.5,), 1.0)
    assert lue.coeff_logn == pytest.approx(-0.25)
    assert_allclose(lue.coeff_n.real, 4 * 0.5 * 0.25)


def test_universal_circle_matches_fh():
    q, y = 0.3, 0.5
    universal = asymptotics.predict_universal(
        lambda theta: 1.0 / (2 * math.pi), (y,), (q,),
        geometry=asymptotics.GEOMETRY_CIRCLE)
    fh = asymptotics.predict_fh(single(q, theta=y))
    assert_allclose(universal.log_value(40).real, fh.log_value(40).real,
                    rtol=1e-12)
    with pytest.raises(DomainError):
        asymptotics.predict_universal(lambda x: 0.0, (0.1,), (0.5,))
    with pytest.raises(DomainError):
        asymptotics.predict_universal(lambda x: 1.0, (0.1,), (0.5,),
                                      geometry='sphere')


def test_gaussian_fluctuation_params():
    t = 0.4
    mu, sigma2, logn = asymptotics.gaussian_fluctuation_params(
        two_t_cos(t), 2.0, charges=(0.5,))
    assert mu == pytest.approx(0.0, abs=1e-15)
    assert sigma2 == pytest.approx(2 * t * t)
    assert logn == pytest.approx(0.5)
    with pytest.raises(DomainError):
        asymptotics.gaussian_fluctuation_params(two_t_cos(t), 0.0)
