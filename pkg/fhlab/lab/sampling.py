# -*- coding: utf-8 -*-
#
# sampling.py - Monte Carlo samplers for CbetaE, GUE and LUE
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

"""Monte Carlo samplers and estimators for product and linear statistics."""

import logging
import math

from dataclasses import dataclass

import numpy as np
from scipy import linalg, stats

from fhlab.lab.errors import DomainError
from fhlab.lab.specfun import LogValue

log = logging.getLogger(__name__)

KIND_ANGLES = 'angles'
KIND_POSITIONS = 'positions'

DEFAULT_CHAINS = 64
DEFAULT_RECORD_EVERY = 4
DEFAULT_BURN_FRACTION = 0.25
DEFAULT_TARGET_ACCEPTANCE = 0.4
DEFAULT_JACKKNIFE_BLOCKS = 32

_MIN_STEP = 1e-3


@dataclass(frozen=True, eq=False)
class SampleBatch:
    """Samples (one row each) with weights, chain labels and provenance."""

    samples: np.ndarray
    weights: np.ndarray
    chain: np.ndarray
    seed: object
    sweeps: int
    kind: str = KIND_POSITIONS
    acceptance: float = 1.0

    @property
    def count(self):
        """Number of recorded samples."""
        return len(self.samples)

    @property
    def particles(self):
        return self.samples.shape[1]


def _pair_log_weight(diff, beta):
    """Return beta log|e^{i a} - e^{i b}| for diff = a - b."""
    with np.errstate(divide='ignore'):
        return beta * np.log(np.abs(2.0 * np.sin(0.5 * diff)))


def _wrap_angles(theta):
    wrapped = np.mod(theta + np.pi, 2.0 * np.pi) - np.pi
    wrapped[wrapped == -np.pi] = np.pi
    return wrapped


def cbeta_sample(n, beta, sweeps, seed, chains=DEFAULT_CHAINS,
                 record_every=DEFAULT_RECORD_EVERY,
                 burn_fraction=DEFAULT_BURN_FRACTION,
                 target_acceptance=DEFAULT_TARGET_ACCEPTANCE):
    """
    Sample CbetaE angles by single-angle Metropolis updates.

    Independent chains run side by side.  The first burn_fraction of the
    sweeps is discarded and tunes the step towards target_acceptance;
    afterwards the step is frozen and every record_every-th sweep is kept.
    """
    if beta <= 0:
        raise DomainError('beta must be positive')
    if n < 1 or sweeps < 1 or chains < 1:
        raise DomainError('n, sweeps and chains must be >= 1')
    rng = np.random.default_rng(seed)
    theta = rng.uniform(-np.pi, np.pi, size=(chains, n))
    burn = int(sweeps * burn_fraction)
    step = np.pi
    recorded = []
    accepted = 0
    proposed = 0
    others = ~np.eye(n, dtype=bool)
    for sweep in range(sweeps):
        sweep_accepted = 0
        for l in range(n):
            current = theta[:, l]
            proposal = current + step * rng.uniform(-1.0, 1.0, size=chains)
            rest = theta[:, others[l]]
            delta = np.sum(
                _pair_log_weight(proposal[:, None] - rest, beta)
                - _pair_log_weight(current[:, None] - rest, beta), axis=1)
            accept = np.log(rng.uniform(size=chains)) < delta
            theta[accept, l] = proposal[accept]
            sweep_accepted += int(np.count_nonzero(accept))
        theta = _wrap_angles(theta)
        rate = sweep_accepted / float(n * chains)
        if sweep < burn:
            step = min(max(step * math.exp(rate - target_acceptance),
                           _MIN_STEP), np.pi)
            continue
        accepted += sweep_accepted
        proposed += n * chains
        if (sweep - burn) % record_every == 0:
            recorded.append(theta.copy())
    if not recorded:
        recorded.append(theta.copy())
    samples = np.concatenate(recorded, axis=0)
    chain = np.tile(np.arange(chains), len(recorded))
    acceptance = accepted / float(proposed) if proposed else 0.0
    log.debug('CbetaE n=%d beta=%g: %d samples, step %.3g, acceptance %.3f',
              n, beta, len(samples), step, acceptance)
    return SampleBatch(samples=samples, weights=np.ones(len(samples)),
                       chain=chain, seed=seed, sweeps=sweeps,
                       kind=KIND_ANGLES, acceptance=acceptance)


def gue_sample(N, count, seed, scale=None):
    """
    Sample GUE eigenvalues for the weight exp(-a^2 x^2), a = sqrt(2N)
    unless given, from the beta = 2 tridiagonal model.
    """
    if N < 1 or count < 1:
        raise DomainError('N and count must be >= 1')
    scale = math.sqrt(2.0 * N) if scale is None else scale
    rng = np.random.default_rng(seed)
    samples = np.empty((count, N))
    dof = 2.0 * np.arange(N - 1, 0, -1)
    for s in range(count):
        diag = rng.normal(0.0, 1.0, size=N)
        offdiag = np.sqrt(rng.chisquare(dof) / 2.0) if N > 1 else \
            np.zeros(0)
        eigs = linalg.eigvalsh_tridiagonal(diag, offdiag) if N > 1 else diag
        samples[s] = eigs / (math.sqrt(2.0) * scale)
    return SampleBatch(samples=samples, weights=np.ones(count),
                       chain=np.arange(count), seed=seed, sweeps=count)


def lue_sample(N, aprime, count, seed, rate=None):
    """
    Sample LUE eigenvalues for the weight x^(a'-1/2) exp(-c x), c = 4N
    unless given, from the beta = 2 bidiagonal model.
    """
    if N < 1 or count < 1:
        raise DomainError('N and count must be >= 1')
    alpha = aprime - 0.5
    if alpha <= -1:
        raise DomainError("LUE needs a' - 1/2 > -1")
    rate = 4.0 * N if rate is None else rate
    rng = np.random.default_rng(seed)
    samples = np.empty((count, N))
    shape_diag = N + alpha - np.arange(N)
    shape_sub = N - 1.0 - np.arange(N - 1)
    for s in range(count):
        diag = np.sqrt(rng.gamma(shape_diag))
        sub = np.sqrt(rng.gamma(shape_sub)) if N > 1 else np.zeros(0)
        main = diag ** 2
        main[1:] += sub ** 2
        if N > 1:
            eigs = linalg.eigvalsh_tridiagonal(main, diag[:-1] * sub)
        else:
            eigs = main
        samples[s] = eigs / rate
    return SampleBatch(samples=samples, weights=np.ones(count),
                       chain=np.arange(count), seed=seed, sweeps=count)


@dataclass(frozen=True)
class McEstimate:
    """Sample mean of a product observable with its jackknife error."""

    mean: LogValue
    rel_stderr: float
    samples: int

    @property
    def stderr(self):
        """Absolute standard error (may overflow for huge means)."""
        if self.mean.zero:
            return 0.0
        return abs(self.mean.value) * self.rel_stderr


def _jackknife_groups(batch, blocks):
    labels = np.unique(batch.chain)
    if 1 < len(labels) < batch.count:
        return np.searchsorted(labels, batch.chain), len(labels)
    blocks = max(2, min(blocks, batch.count))
    return (np.arange(batch.count) * blocks) // batch.count, blocks


def jackknife_mean(values, weights, groups, count):
    """Return (mean, stderr) with one jackknife block per group label."""
    total = np.sum(weights * values)
    norm = np.sum(weights)
    block_sums = np.bincount(groups, weights=(weights * values).real,
                             minlength=count).astype(complex)
    if np.iscomplexobj(values):
        block_sums += 1j * np.bincount(groups, weights=(weights
                                                        * values).imag,
                                       minlength=count)
    block_norms = np.bincount(groups, weights=weights, minlength=count)
    keep = block_norms > 0
    leave_one_out = (total - block_sums[keep]) / (norm - block_norms[keep])
    used = int(np.count_nonzero(keep))
    if used < 2:
        return total / norm, 0.0
    spread = np.sum(np.abs(leave_one_out - np.mean(leave_one_out)) ** 2)
    return total / norm, math.sqrt((used - 1) / used * spread)


def mc_average(batch, log_factor, blocks=DEFAULT_JACKKNIFE_BLOCKS):
    """
    Return the McEstimate of E[prod_l f(x_l)], with log_factor(x) = log f
    evaluated elementwise (real or complex, -inf for zeros).
    """
    with np.errstate(divide='ignore'):
        logs = np.asarray(log_factor(batch.samples))
    if logs.shape != batch.samples.shape:
        logs = np.broadcast_to(logs, batch.samples.shape)
    log_obs = np.sum(logs, axis=1)
    finite = np.isfinite(log_obs.real)
    if not np.any(finite):
        return McEstimate(LogValue.zero_value(), 0.0, batch.count)
    shift = float(np.max(log_obs.real[finite]))
    values = np.where(finite, np.exp(log_obs - shift), 0.0)
    if not np.iscomplexobj(values) or not np.any(values.imag):
        values = values.real
    groups, count = _jackknife_groups(batch, blocks)
    mean, stderr = jackknife_mean(values, batch.weights, groups, count)
    if mean == 0:
        return McEstimate(LogValue.zero_value(), 0.0, batch.count)
    estimate = LogValue.from_number(mean) * LogValue(shift)
    return McEstimate(estimate, stderr / abs(mean), batch.count)


@dataclass(frozen=True, eq=False)
class LinearStatistic:
    """Empirical distribution of A = sum_j a(x_j)."""

    values: np.ndarray
    counts: np.ndarray
    edges: np.ndarray
    mean: float
    variance: float
    normality_pvalue: float = None


def linear_statistic_histogram(batch, func, bins=50):
    """Return the LinearStatistic of func summed over each sample."""
    values = np.sum(np.real(func(batch.samples)) * np.ones_like(
        batch.samples), axis=1)
    counts, edges = np.histogram(values, bins=bins)
    mean = float(np.mean(values))
    variance = float(np.var(values, ddof=1)) if len(values) > 1 else 0.0
    pvalue = None
    if variance > 0:
        # one value per chain keeps the normality test free of correlations
        labels, first = np.unique(batch.chain[::-1], return_index=True)
        decorrelated = values[::-1][first] if len(labels) >= 20 else values
        if len(decorrelated) >= 20:
            pvalue = float(stats.normaltest(decorrelated).pvalue)
    return LinearStatistic(values=values, counts=counts, edges=edges,
                           mean=mean, variance=variance,
                           normality_pvalue=pvalue)
