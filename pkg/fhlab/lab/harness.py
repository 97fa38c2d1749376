# -*- coding: utf-8 -*-
#
# harness.py - verification runs over size grids
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

"""Run exact computations against predictions and fit the corrections."""

import logging
import math
import time
import zlib

from dataclasses import dataclass, field
from multiprocessing import Pool

import mpmath
import numpy as np
from numpy.polynomial import Polynomial

from fhlab.lab import asymptotics, codec, ensembles, physics, symbols
from fhlab.lab.cases import (
    KIND_CBETA, KIND_CN_LAMBDA, KIND_HANKEL_GUE, KIND_HANKEL_LUE, KIND_ISING,
    KIND_LENARD, KIND_TOEPLITZ, KIND_TOEPLITZ_HANKEL)
from fhlab.lab.determinants import (
    TIER_DOUBLE, TIER_EXTENDED, PrecisionContext)
from fhlab.lab.errors import CaseError, DomainError, FhlabError
from fhlab.lab.sampling import cbeta_sample, gue_sample, lue_sample, mc_average
from fhlab.lab.specfun import (
    LogValue, cbeta_norm, gaussian_norm, laguerre_norm, selberg_f)
from fhlab.lab.symbols import DEFAULT_SINGULAR_TABLE, FHSymbol, Singularity

log = logging.getLogger(__name__)

# factorization probes: smooth part split off, pairwise split of the
# singularities on the circle, and the same split for Gaussian and
# half-line (Laguerre) log-gases
PROBE_SMOOTH_SPLIT = 'smooth-split'
PROBE_PAIR_SPLIT = 'pair-split'
PROBE_GAUSSIAN_SPLIT = 'gaussian-split'
PROBE_LAGUERRE_SPLIT = 'laguerre-split'
PROBE_KINDS = (PROBE_SMOOTH_SPLIT, PROBE_PAIR_SPLIT, PROBE_GAUSSIAN_SPLIT,
               PROBE_LAGUERRE_SPLIT)
# short names accepted in probe documents
PROBE_ALIASES = {
    'ff1': PROBE_SMOOTH_SPLIT,
    'ff2': PROBE_PAIR_SPLIT,
    'z0': PROBE_GAUSSIAN_SPLIT,
    'L6': PROBE_LAGUERRE_SPLIT,
}

# Monte Carlo results must also lie within this many standard errors
STDERR_WINDOW = 3.0

_VARIANT_KINDS = {
    'O-odd': ensembles.ORTHOGONAL_MINUS_ODD,
    'O+odd': ensembles.ORTHOGONAL_PLUS_ODD,
}


def derive_seed(seed, label, n):
    """Return the SeedSequence of one (case or probe, size) point."""
    return np.random.SeedSequence([int(seed), zlib.crc32(label.encode()),
                                   int(n)])


def ratio_of(exact, predicted):
    """Return exact/predicted as a real number, phases reconciled."""
    if exact.zero:
        return 0.0
    delta = exact.log_modulus - predicted.log_modulus
    if delta > 700:
        return math.inf
    return math.exp(delta) * math.cos(exact.phase - predicted.phase)


@dataclass(frozen=True)
class RunOptions:
    """Settings shared by every case of a run."""

    tier: str = TIER_DOUBLE
    dps: int = 30
    hankel_extra_dps: int = 2
    table_size: int = DEFAULT_SINGULAR_TABLE
    sampling: dict = field(default_factory=dict)

    def context(self, tier):
        """
        Return the PrecisionContext of a case of the given tier; an
        extended run tier lifts double cases.
        """
        if TIER_EXTENDED in (tier, self.tier):
            tier = TIER_EXTENDED
        return PrecisionContext(tier, dps=self.dps,
                                hankel_extra_dps=self.hankel_extra_dps)


@dataclass(frozen=True)
class VerificationRecord:
    """Exact value, prediction and their ratio at one size."""

    case_id: str
    n: int
    exact: LogValue = None
    predicted: LogValue = None
    ratio: float = None
    stderr: float = None
    seconds: float = 0.0
    degenerate: bool = False
    error: str = None

    @property
    def deviation(self):
        """|ratio - 1|, or None without a ratio."""
        return None if self.ratio is None else abs(self.ratio - 1.0)

    def __str__(self):
        if self.error:
            return 'n=%d: error: %s' % (self.n, self.error)
        if self.degenerate:
            return 'n=%d: exact %s, prediction degenerate' % (self.n,
                                                              self.exact)
        text = 'n=%d: ratio %.12g' % (self.n, self.ratio)
        if self.stderr is not None:
            text += ' +- %.3g' % self.stderr
        return text


@dataclass(frozen=True)
class CorrectionFit:
    """
    Least-squares fits of the finite-size corrections:
    log|r| = log_slope / n, and |r - 1| = a / n + b / n^2.
    """

    log_slope: float
    log_residual: float
    a: float = None
    b: float = None
    residual: float = None


@dataclass(frozen=True)
class CaseResult:
    """Records of one case with the fit and the verdict."""

    spec: object
    prediction: object
    records: tuple
    fit: CorrectionFit = None
    passed: bool = False
    degenerate: bool = False

    def __str__(self):
        lines = ['%s [%s]: %s' % (self.spec.case_id,
                                  'PASS' if self.passed else 'FAIL',
                                  self.prediction)]
        lines.extend('  %s' % record for record in self.records)
        if self.fit is not None and self.fit.a is not None:
            lines.append('  |r-1| = %.4g/n + %.4g/n^2 (residual %.3g)'
                         % (self.fit.a, self.fit.b, self.fit.residual))
        return '\n'.join(lines)


def fit_corrections(records):
    """Return the CorrectionFit of the records with a positive ratio."""
    points = [(r.n, r.ratio) for r in records
              if r.ratio is not None and r.ratio > 0
              and math.isfinite(r.ratio)]
    if not points:
        return None
    x = np.array([1.0 / n for n, _ in points])
    ratios = np.array([ratio for _, ratio in points])
    y = np.log(ratios)
    slope = np.linalg.lstsq(x[:, None], y, rcond=None)[0]
    log_residual = float(np.linalg.norm(x * slope[0] - y))
    if len(points) < 2:
        return CorrectionFit(float(slope[0]), log_residual)
    design = np.column_stack([x, x * x])
    deviation = np.abs(ratios - 1.0)
    coef = np.linalg.lstsq(design, deviation, rcond=None)[0]
    residual = float(np.linalg.norm(design @ coef - deviation))
    return CorrectionFit(float(slope[0]), log_residual, float(coef[0]),
                         float(coef[1]), residual)


def _mp_exp_polynomial(poly):
    """Return x -> exp(poly(x)) for mpmath x, or None for poly = 0."""
    coeffs = [float(c) for c in poly.coef]
    if not any(coeffs):
        return None

    def smooth(x):
        return mpmath.exp(mpmath.polyval(coeffs[::-1], x))
    return smooth


def _mp_exp_polynomial_sqrt(poly):
    """Return u -> exp(poly(sqrt u)) for mpmath u, or None for poly = 0."""
    smooth = _mp_exp_polynomial(poly)
    if smooth is None:
        return None

    def smooth_sq(u):
        return smooth(mpmath.sqrt(u))
    return smooth_sq


class Verifier:
    """Exact values and prediction of one case."""

    def __init__(self, spec, ctx=None, options=None):
        self.spec = spec
        self.options = options if options is not None else RunOptions()
        self.ctx = ctx if ctx is not None else \
            self.options.context(spec.tier)
        self._exact_cb = {
            KIND_TOEPLITZ: self._exact_toeplitz,
            KIND_LENARD: self._exact_lenard,
            KIND_ISING: self._exact_ising,
            KIND_CBETA: self._exact_cbeta,
            KIND_TOEPLITZ_HANKEL: self._exact_toeplitz_hankel,
            KIND_CN_LAMBDA: self._exact_cn_lambda,
            KIND_HANKEL_GUE: self._exact_hankel_gue,
            KIND_HANKEL_LUE: self._exact_hankel_lue,
        }
        self._predict_cb = {
            KIND_TOEPLITZ: self._predict_toeplitz,
            KIND_LENARD: self._predict_lenard,
            KIND_ISING: self._predict_ising,
            KIND_CBETA: self._predict_cbeta,
            KIND_TOEPLITZ_HANKEL: self._predict_toeplitz_hankel,
            KIND_CN_LAMBDA: self._predict_cn_lambda,
            KIND_HANKEL_GUE: self._predict_hankel_gue,
            KIND_HANKEL_LUE: self._predict_hankel_lue,
        }

    # parameters

    def _value(self, name, default=None):
        params = self.spec.params
        if name in params:
            return float(params[name])
        if default is None:
            raise CaseError('case "%s" misses parameter "%s"'
                            % (self.spec.case_id, name))
        return default

    def _list(self, name):
        values = self.spec.params.get(name)
        if not isinstance(values, list):
            raise CaseError('case "%s" needs a list "%s"'
                            % (self.spec.case_id, name))
        return [float(v) for v in values]

    def _symbol(self):
        if 'symbol' not in self.spec.params:
            raise CaseError('case "%s" has no symbol' % self.spec.case_id)
        return codec.decode_symbol(self.spec.params['symbol'])

    def _even_symbol(self):
        if 'box' in self.spec.params:
            X, Y = self._list('box')
            return physics.box_symbol(X, Y)
        return self._symbol()

    def _polynomial(self):
        return Polynomial([float(c) for c in
                           self.spec.params.get('smooth', [0.0])])

    def _variant_kind(self):
        variant = self.spec.params.get('variant', 'O-odd')
        if variant not in _VARIANT_KINDS:
            raise CaseError('unknown Toeplitz+Hankel variant "%s"' % variant)
        return variant, _VARIANT_KINDS[variant]

    def seed(self, n):
        """Return the seed of size n."""
        return derive_seed(self.spec.seed, self.spec.case_id, n)

    def _sampled(self, batch, log_factor, scale):
        estimate = mc_average(batch, log_factor)
        log.debug('%s: %d samples, relative stderr %.3g',
                  self.spec.case_id, estimate.samples, estimate.rel_stderr)
        return estimate.mean * scale, estimate.rel_stderr

    def _group(self, kind, n, sym):
        return ensembles.group_average(ensembles.EnsembleId(kind, n), sym,
                                       self.ctx, self.options.table_size)

    # exact values: (LogValue, relative stderr or None)

    def _exact_toeplitz(self, n):
        return self._group(ensembles.UNITARY, n, self._symbol()), None

    def _exact_lenard(self, n):
        sym = physics.lenard_symbol(self._value('X'))
        return self._group(ensembles.UNITARY, n, sym), None

    def _exact_ising(self, n):
        sym = symbols.ising_determinant_symbol(self._value('alpha1'),
                                               self._value('alpha2'))
        return self._group(ensembles.UNITARY, n, sym), None

    def _exact_cbeta(self, n):
        beta, q, b = self._value('beta'), self._value('q'), \
            self._value('b', 0.0)
        c = beta / 2.0
        if self.spec.monte_carlo:
            batch = cbeta_sample(n, beta, self.spec.samples, self.seed(n),
                                 **self.options.sampling)

            def log_factor(theta):
                return (1j * c * b * theta
                        + beta * q * np.log(np.abs(1.0 + np.exp(1j * theta))))
            return self._sampled(batch, log_factor, LogValue(0.0))
        value = selberg_f(n, 2.0 * c * q, c) / (
            selberg_f(n, c * (q + b), c) * selberg_f(n, c * (q - b), c))
        return value, None

    def _exact_toeplitz_hankel(self, n):
        _, kind = self._variant_kind()
        return self._group(kind, n, self._even_symbol()), None

    def _exact_cn_lambda(self, n):
        lambda1 = self._value('lambda1') + 0.5
        lambda2 = self._value('lambda2') + 0.5
        sym = self._symbol()
        for kind, lambdas in ensembles.GROUP_LAMBDAS.items():
            if lambdas == (lambda1, lambda2):
                return self._group(kind, n, sym), None
        return ensembles.cn_lambda_average(n, lambda1, lambda2, sym,
                                           self.ctx), None

    def _exact_hankel_gue(self, n):
        points, exponents = self._list('points'), self._list('exponents')
        poly = self._polynomial()
        scale = math.sqrt(2.0 * n)
        total_q = sum(exponents)
        norm = gaussian_norm(n + total_q, scale)
        if self.spec.monte_carlo:
            batch = gue_sample(n, self.spec.samples, self.seed(n))

            def log_factor(x):
                total = poly(x)
                for y, q in zip(points, exponents):
                    total = total + 2.0 * q * np.log(np.abs(x - y))
                return total
            return self._sampled(batch, log_factor,
                                 gaussian_norm(n, scale) / norm)
        average = ensembles.gaussian_average(
            n, scale, points, [2.0 * q for q in exponents],
            _mp_exp_polynomial(poly), self.ctx)
        return average / norm, None

    def _exact_hankel_lue(self, n):
        points, exponents = self._list('points'), self._list('exponents')
        aprime = self._value('aprime')
        poly = self._polynomial()
        rate = 4.0 * n
        total_q = sum(exponents)
        squares = [y * y for y in points]
        # L_M[1] = 2^-M L~_{M,4n}[1] on the half line
        norm = laguerre_norm(n + total_q, rate, aprime) / \
            LogValue(total_q * math.log(2.0))
        if self.spec.monte_carlo:
            batch = lue_sample(n, aprime, self.spec.samples, self.seed(n))

            def log_factor(u):
                total = poly(np.sqrt(u))
                for t, q in zip(squares, exponents):
                    total = total + 2.0 * q * np.log(np.abs(u - t))
                return total
            return self._sampled(batch, log_factor,
                                 laguerre_norm(n, rate, aprime) / norm)
        average = ensembles.laguerre_average(
            n, rate, aprime, squares, [2.0 * q for q in exponents],
            _mp_exp_polynomial_sqrt(poly), self.ctx)
        return average / norm, None

    # predictions

    def _predict_toeplitz(self):
        sym = self._symbol()
        if sym.singularities:
            return asymptotics.predict_fh(sym)
        return asymptotics.predict_szego(sym.smooth_log)

    def _predict_lenard(self):
        return asymptotics.predict_fh(physics.lenard_symbol(self._value('X')))

    def _predict_ising(self):
        alpha1, alpha2 = self._value('alpha1'), self._value('alpha2')
        predictor = self.spec.params.get('predictor', 'closed-form')
        if predictor not in ('closed-form', 'transformed', 'naive', 'fh'):
            raise CaseError('unknown Ising predictor "%s"' % predictor)
        row = symbols.ising_row_symbol(alpha1, alpha2)
        if predictor in ('naive', 'fh') or alpha2 < 1 - 1e-12:
            return asymptotics.predict_fh(row)
        if abs(alpha2 - 1.0) < 1e-12:
            return asymptotics.ising_critical_closed_form(alpha1)
        if predictor == 'transformed':
            return asymptotics.predict_ising_highT(alpha1, alpha2)
        return asymptotics.ising_highT_closed_form(alpha1, alpha2)

    def _predict_cbeta(self):
        sym = FHSymbol(singularities=(
            Singularity(math.pi, self._value('q'), self._value('b', 0.0)),))
        return asymptotics.predict_beta_fh(sym, self._value('beta'))

    def _predict_toeplitz_hankel(self):
        variant, _ = self._variant_kind()
        sym = self._even_symbol()
        if variant == 'O+odd':
            # O+(2N+1) of g(theta) is O-(2N+1) of g(pi - theta)
            sym = symbols.flip_symbol(sym)
        return asymptotics.predict_toeplitz_hankel(sym)

    def _predict_cn_lambda(self):
        return asymptotics.predict_cn_lambda(self._symbol(),
                                             self._value('lambda1'),
                                             self._value('lambda2'))

    def _predict_hankel_gue(self):
        return asymptotics.predict_hankel_gue(
            self._list('points'), self._list('exponents'), self._polynomial())

    def _predict_hankel_lue(self):
        return asymptotics.predict_hankel_lue(
            self._list('points'), self._list('exponents'),
            self._value('aprime'), self._polynomial())

    def predict(self):
        """Return the Prediction of the case."""
        return self._predict_cb[self.spec.kind]()

    def exact(self, n):
        """Return (exact value, relative stderr or None) at size n."""
        return self._exact_cb[self.spec.kind](n)

    def record(self, n, prediction, prediction_error=None):
        """Return the VerificationRecord of size n."""
        start = time.perf_counter()
        case_id = self.spec.case_id
        try:
            exact, rel_stderr = self.exact(n)
        except (FhlabError, ArithmeticError, ValueError) as exc:
            log.debug('%s n=%d: exact value failed: %s', case_id, n, exc)
            return VerificationRecord(case_id, n, error=str(exc),
                                      seconds=time.perf_counter() - start)
        seconds = time.perf_counter() - start
        if prediction is None:
            return VerificationRecord(case_id, n, exact=exact,
                                      seconds=seconds,
                                      error=prediction_error)
        if prediction.degenerate:
            return VerificationRecord(case_id, n, exact=exact,
                                      seconds=seconds, degenerate=True)
        try:
            predicted = prediction.evaluate(n)
        except (FhlabError, ArithmeticError, ValueError) as exc:
            return VerificationRecord(case_id, n, exact=exact,
                                      seconds=seconds, error=str(exc))
        ratio = ratio_of(exact, predicted)
        stderr = None if rel_stderr is None else abs(ratio) * rel_stderr
        log.debug('%s n=%d: ratio %.12g (%.3fs)', case_id, n, ratio, seconds)
        return VerificationRecord(case_id, n, exact=exact,
                                  predicted=predicted, ratio=ratio,
                                  stderr=stderr, seconds=seconds)


def _run_point(task):
    """Worker: return the record of one (case, size) point."""
    spec, ctx, options, n, prediction, prediction_error = task
    return Verifier(spec, ctx, options).record(n, prediction,
                                               prediction_error)


def _passed(spec, records, degenerate):
    if spec.expect_degenerate:
        return degenerate and all(r.error is None for r in records)
    if degenerate or not records:
        return False
    last = records[-1]
    if last.deviation is None:
        return False
    if last.deviation > spec.tolerance:
        return False
    if last.stderr is not None and \
            last.deviation > STDERR_WINDOW * last.stderr:
        return False
    return True


def _case_prediction(spec, ctx, options):
    try:
        return Verifier(spec, ctx, options).predict(), None
    except (FhlabError, ArithmeticError, ValueError) as exc:
        log.debug('%s: prediction failed: %s', spec.case_id, exc)
        return None, str(exc)


def _unique(specs):
    """Return specs with repeated case ids dropped (first one kept)."""
    unique = {}
    for spec in specs:
        if spec.case_id in unique:
            log.warning('case "%s" selected twice, running it once',
                        spec.case_id)
            continue
        unique[spec.case_id] = spec
    return list(unique.values())


def run_cases(specs, ctx=None, jobs=1, options=None):
    """
    Return the CaseResult of every case.

    ctx forces one PrecisionContext on every case; otherwise each case
    runs in its own tier with the digits of options.  Each (case, size)
    point is an independent task; with jobs > 1 the tasks run in a
    process pool.  Records are ordered by size whatever the number of
    jobs.
    """
    specs = _unique(specs)
    options = options if options is not None else RunOptions()
    predictions = [_case_prediction(spec, ctx, options) for spec in specs]
    tasks = []
    for spec, (prediction, error) in zip(specs, predictions):
        tasks.extend((spec, ctx, options, n, prediction, error)
                     for n in spec.sizes)
    if jobs > 1 and len(tasks) > 1:
        with Pool(min(jobs, len(tasks))) as pool:
            records = pool.map(_run_point, tasks)
    else:
        records = [_run_point(task) for task in tasks]
    results = []
    for spec, (prediction, _) in zip(specs, predictions):
        case_records = tuple(sorted(
            (r for r in records if r.case_id == spec.case_id),
            key=lambda r: r.n))
        degenerate = prediction is not None and prediction.degenerate
        results.append(CaseResult(
            spec=spec, prediction=prediction, records=case_records,
            fit=fit_corrections(case_records),
            passed=_passed(spec, case_records, degenerate),
            degenerate=degenerate))
    return results


def run_case(spec, ctx=None, jobs=1, options=None):
    """Return the CaseResult of one case."""
    return run_cases([spec], ctx, jobs, options)[0]


@dataclass(frozen=True)
class FactorizationRow:
    """Both sides of a factorization at one size."""

    n: int
    lhs: LogValue
    rhs: LogValue
    ratio: float
    stderr: float = None

    def __str__(self):
        text = 'n=%d: lhs %s, rhs %s, ratio %.12g' % (self.n, self.lhs,
                                                       self.rhs, self.ratio)
        if self.stderr is not None:
            text += ' +- %.3g' % self.stderr
        return text


class FactorizationProbe:
    """Left and right sides of the factorization heuristics."""

    def __init__(self, kind, params, ctx=PrecisionContext(), samples=0,
                 seed=0, options=None):
        self.kind = PROBE_ALIASES.get(kind, kind)
        self.params = dict(params)
        self.ctx = ctx
        self.options = options if options is not None else RunOptions()
        self.samples = samples
        self.seed = seed
        self._probe_cb = {
            PROBE_SMOOTH_SPLIT: self._smooth_split,
            PROBE_PAIR_SPLIT: self._pair_split,
            PROBE_GAUSSIAN_SPLIT: self._gaussian_split,
            PROBE_LAGUERRE_SPLIT: self._laguerre_split,
        }
        if self.kind not in self._probe_cb:
            raise CaseError('unknown factorization probe "%s"' % kind)

    def _floats(self, name):
        try:
            return [float(v) for v in self.params[name]]
        except (KeyError, TypeError) as exc:
            raise CaseError('probe "%s" needs a list "%s"'
                            % (self.kind, name)) from exc

    def _averages(self, n, beta, syms):
        """
        Return ([<prod g>_n for g in syms], relative stderr or None) in
        CbetaE, singularity strengths a read as the exponents q of
        |e^{i theta} - e^{i phi}|^{beta q}.
        """
        if beta == 2.0:
            unitary = ensembles.EnsembleId.unitary(n)
            return [ensembles.group_average(unitary, sym, self.ctx,
                                            self.options.table_size)
                    for sym in syms], None
        if self.samples <= 0:
            raise DomainError('beta = %g needs a Monte Carlo budget' % beta)
        batch = cbeta_sample(n, beta, self.samples,
                             derive_seed(self.seed, self.kind, n),
                             **self.options.sampling)
        means = []
        rel_stderr = 0.0
        for sym in syms:
            if any(s.b != 0 for s in sym.singularities):
                raise DomainError('jumps need the beta = 2 route')

            def log_factor(theta, sym=sym):
                total = sym.smooth_log.evaluate(theta)
                for s in sym.singularities:
                    total = total + beta * s.a * np.log(
                        np.abs(np.exp(1j * theta) - np.exp(1j * s.theta)))
                return total
            estimate = mc_average(batch, log_factor)
            means.append(estimate.mean)
            rel_stderr = math.hypot(rel_stderr, estimate.rel_stderr)
        return means, rel_stderr

    def _smooth_split(self, n):
        """
        <a prod> Z_n / Z_{n+Q} against e^{-sum q log a(phi)} e^{Q c_0}
        <a> <prod> Z_n / Z_{n+Q}.
        """
        sym = codec.decode_symbol(self.params['symbol'])
        beta = float(self.params.get('beta', 2.0))
        smooth = FHSymbol(sym.smooth_log)
        singular = FHSymbol(singularities=sym.singularities)
        total_q = sum(s.a for s in sym.singularities)
        (full, smooth_avg, singular_avg), rel_stderr = self._averages(
            n, beta, [sym, smooth, singular])
        shift = cbeta_norm(n, beta) / cbeta_norm(n + total_q, beta)
        log_a = sum(s.a * complex(sym.smooth_log.evaluate(s.theta))
                    for s in sym.singularities)
        lhs = full * shift
        rhs = LogValue.from_log(total_q * complex(sym.c0) - log_a) * \
            smooth_avg * singular_avg * shift
        return lhs, rhs, rel_stderr

    def _pair_split(self, n):
        """
        prod_{j<k} |e^{i phi_j} - e^{i phi_k}|^{beta q_j q_k} <prod>
        Z_n / Z_{n+Q} against prod_j <|.|^{beta q_j}> Z_n / Z_{n+q_j}.
        """
        sym = codec.decode_symbol(self.params['symbol'])
        beta = float(self.params.get('beta', 2.0))
        sings = sym.singularities
        singles = [FHSymbol(singularities=(s,)) for s in sings]
        averages, rel_stderr = self._averages(
            n, beta, [FHSymbol(singularities=sings)] + singles)
        z_n = cbeta_norm(n, beta)
        cross = 0.0
        for i, first in enumerate(sings):
            for second in sings[i + 1:]:
                cross += beta * first.a * second.a * math.log(abs(
                    np.exp(1j * first.theta) - np.exp(1j * second.theta)))
        total_q = sum(s.a for s in sings)
        lhs = LogValue(cross) * averages[0] * z_n / \
            cbeta_norm(n + total_q, beta)
        rhs = LogValue(0.0)
        for sing, average in zip(sings, averages[1:]):
            rhs = rhs * average * z_n / cbeta_norm(n + sing.a, beta)
        return lhs, rhs, rel_stderr

    def _gaussian_split(self, N):
        """
        prod |y_j - y_k|^{2 q_j q_k} e^{-2N sum q y^2} G_N[prod] /
        G_{N+Q}[1] against prod e^{-2N q y^2} G_N[|x-y|^{2q}] / G_{N+q}[1].
        """
        points, exponents = self._floats('points'), self._floats('exponents')
        scale = math.sqrt(2.0 * N)
        powers = [2.0 * q for q in exponents]
        cross = 0.0
        for i, (y, q) in enumerate(zip(points, exponents)):
            cross -= 2.0 * N * q * y * y
            for y_k, q_k in zip(points[i + 1:], exponents[i + 1:]):
                cross += 2.0 * q * q_k * math.log(abs(y - y_k))
        lhs = LogValue(cross) * ensembles.gaussian_average(
            N, scale, points, powers, ctx=self.ctx) / \
            gaussian_norm(N + sum(exponents), scale)
        rhs = LogValue(0.0)
        for y, q, p in zip(points, exponents, powers):
            rhs = rhs * LogValue(-2.0 * N * q * y * y) * \
                ensembles.gaussian_average(N, scale, (y,), (p,),
                                           ctx=self.ctx) / \
                gaussian_norm(N + q, scale)
        return lhs, rhs, None

    def _laguerre_split(self, N):
        """
        The half-line counterpart of the Gaussian split, with
        |x^2 - y^2| distances and the weight x^{2a'} e^{-4N x^2}.
        """
        points, exponents = self._floats('points'), self._floats('exponents')
        aprime = float(self.params.get('aprime', 1.0))
        rate = 4.0 * N
        log2 = math.log(2.0)

        def half_line(points, exponents):
            squares = [y * y for y in points]
            powers = [2.0 * q for q in exponents]
            return LogValue(-N * log2) * ensembles.laguerre_average(
                N, rate, aprime, squares, powers, ctx=self.ctx)

        def norm(size):
            return LogValue(-size * log2) * laguerre_norm(size, rate, aprime)

        def prefactor(y, q):
            return (q * q * math.log(2.0 * y) - 4.0 * N * q * y * y
                    + (2.0 * aprime - 1.0) * q * math.log(y))

        total_q = sum(exponents)
        cross = 0.0
        for i, (y, q) in enumerate(zip(points, exponents)):
            cross += prefactor(y, q)
            for y_k, q_k in zip(points[i + 1:], exponents[i + 1:]):
                cross += 2.0 * q * q_k * math.log(abs(y_k * y_k - y * y))
        lhs = LogValue(cross) * half_line(points, exponents) / \
            (LogValue(total_q * log2) * norm(N + total_q))
        rhs = LogValue(0.0)
        for y, q in zip(points, exponents):
            rhs = rhs * LogValue(prefactor(y, q)) * half_line((y,), (q,)) / \
                (LogValue(q * log2) * norm(N + q))
        return lhs, rhs, None

    def row(self, n):
        """Return the FactorizationRow of size n."""
        lhs, rhs, rel_stderr = self._probe_cb[self.kind](n)
        ratio = ratio_of(lhs, rhs)
        stderr = None if rel_stderr is None else abs(ratio) * rel_stderr
        log.debug('%s n=%d: ratio %.12g', self.kind, n, ratio)
        return FactorizationRow(n, lhs, rhs, ratio, stderr)


def run_factorization_probe(kind, params, sizes, ctx=PrecisionContext(),
                            samples=0, seed=0, options=None):
    """Return the table of LHS/RHS ratios of a factorization probe."""
    probe = FactorizationProbe(kind, params, ctx, samples, seed, options)
    table = codec.LabObjects()
    for n in sizes:
        table.append(probe.row(int(n)))
    return table
