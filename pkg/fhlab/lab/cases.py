# -*- coding: utf-8 -*-
#
# cases.py - verification case descriptions and the built-in catalog
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

"""Verification case descriptions and the built-in catalog."""

from dataclasses import dataclass, field

from fhlab.lab.determinants import TIER_DOUBLE, TIER_EXTENDED, TIERS
from fhlab.lab.errors import CaseError

KIND_TOEPLITZ = 'toeplitz'
KIND_ISING = 'ising'
KIND_CBETA = 'cbeta'
KIND_TOEPLITZ_HANKEL = 'toeplitz-hankel'
KIND_CN_LAMBDA = 'cn-lambda'
KIND_HANKEL_GUE = 'hankel-gue'
KIND_HANKEL_LUE = 'hankel-lue'
KIND_LENARD = 'lenard'
CASE_KINDS = (KIND_TOEPLITZ, KIND_ISING, KIND_CBETA, KIND_TOEPLITZ_HANKEL,
              KIND_CN_LAMBDA, KIND_HANKEL_GUE, KIND_HANKEL_LUE, KIND_LENARD)


@dataclass(frozen=True, eq=False)
class CaseSpec:
    """
    One verification case: what to compute exactly, what to predict, on
    which sizes and how closely the two must agree at the largest size.

    params holds JSON-like data read by the evaluator of the case kind
    (symbol documents, ensemble parameters, predictor choice).  samples
    > 0 switches the exact side to Monte Carlo where the kind has one.
    """

    case_id: str
    kind: str
    params: dict = field(default_factory=dict)
    sizes: tuple = ()
    tier: str = TIER_DOUBLE
    samples: int = 0
    seed: int = 0
    tolerance: float = 0.05
    reference: str = ''

    def __post_init__(self):
        if not self.case_id:
            raise CaseError('case id is empty')
        if self.kind not in CASE_KINDS:
            raise CaseError('case "%s": unknown kind "%s"'
                            % (self.case_id, self.kind))
        sizes = tuple(int(n) for n in self.sizes)
        if not sizes:
            raise CaseError('case "%s": no sizes' % self.case_id)
        if sizes[0] < 1 or any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise CaseError('case "%s": sizes must be positive and strictly '
                            'increasing' % self.case_id)
        object.__setattr__(self, 'sizes', sizes)
        if self.tier not in TIERS:
            raise CaseError('case "%s": unknown precision tier "%s"'
                            % (self.case_id, self.tier))
        if not self.tolerance > 0:
            raise CaseError('case "%s": tolerance must be positive'
                            % self.case_id)
        if self.samples < 0:
            raise CaseError('case "%s": negative sample budget'
                            % self.case_id)
        object.__setattr__(self, 'params', dict(self.params))

    @property
    def monte_carlo(self):
        """True if the exact side is sampled."""
        return self.samples > 0

    @property
    def expect_degenerate(self):
        """True if the case checks that its predictor reports degeneracy."""
        return bool(self.params.get('expect_degenerate', False))


def _two_t_cos(t):
    return {'smooth': {'type': 'two-t-cos', 'params': {'t': t}}}


CATALOG = (
    CaseSpec('szego-2tcos', KIND_TOEPLITZ,
             {'symbol': _two_t_cos(0.5)},
             sizes=(8, 16, 32), tolerance=1e-6,
             reference='strong Szego limit theorem, a = exp(2t cos theta)'),
    CaseSpec('lenard-X0.5', KIND_LENARD, {'X': 0.5},
             sizes=(16, 32, 64), tolerance=0.05,
             reference='Fisher-Hartwig formula for the circle density '
                       'matrix of impenetrable bosons'),
    CaseSpec('ising-critical', KIND_ISING,
             {'alpha1': 0.3, 'alpha2': 1.0},
             sizes=(16, 32, 64), tolerance=0.02,
             reference='critical row correlation, jump singularity '
                       'b = -1/2'),
    CaseSpec('ising-highT', KIND_ISING,
             {'alpha1': 0.2, 'alpha2': 2.0, 'predictor': 'closed-form'},
             sizes=(16, 32, 64), tolerance=0.05,
             reference='high-temperature row correlation closed form'),
    CaseSpec('ising-highT-transformed', KIND_ISING,
             {'alpha1': 0.2, 'alpha2': 2.0, 'predictor': 'transformed'},
             sizes=(16, 32, 64), tolerance=0.05,
             reference='Fisher-Hartwig formula after moving the symbol '
                       'to |z| = alpha2'),
    CaseSpec('fh-degenerate-highT-naive', KIND_ISING,
             {'alpha1': 0.2, 'alpha2': 2.0, 'predictor': 'naive',
              'expect_degenerate': True},
             sizes=(16, 32), tolerance=0.05,
             reference='Fisher-Hartwig formula on the b = -1 row symbol '
                       '(degenerate)'),
    CaseSpec('beta-fh-beta1-q0.5-b0', KIND_CBETA,
             {'beta': 1.0, 'q': 0.5, 'b': 0.0},
             sizes=(25, 50, 100), tolerance=0.02,
             reference='CbetaE Fisher-Hartwig form from the Selberg '
                       'integral'),
    CaseSpec('beta-fh-beta1-q0.5-b0.25', KIND_CBETA,
             {'beta': 1.0, 'q': 0.5, 'b': 0.25},
             sizes=(25, 50, 100), tolerance=0.02,
             reference='CbetaE Fisher-Hartwig form from the Selberg '
                       'integral'),
    CaseSpec('beta-fh-beta4-q0.5-b0', KIND_CBETA,
             {'beta': 4.0, 'q': 0.5, 'b': 0.0},
             sizes=(25, 50, 100), tolerance=0.02,
             reference='CbetaE Fisher-Hartwig form from the Selberg '
                       'integral'),
    CaseSpec('beta-fh-beta4-q0.5-b0.25', KIND_CBETA,
             {'beta': 4.0, 'q': 0.5, 'b': 0.25},
             sizes=(25, 50, 100), tolerance=0.02,
             reference='CbetaE Fisher-Hartwig form from the Selberg '
                       'integral'),
    CaseSpec('toeplitz-hankel-box-0.3-0.7', KIND_TOEPLITZ_HANKEL,
             {'box': [0.3, 0.7], 'variant': 'O-odd'},
             sizes=(16, 32, 64), tolerance=0.05,
             reference='Toeplitz+Hankel Fisher-Hartwig formula, O-(2N+1)'),
    CaseSpec('mixed-box-0.3-0.7', KIND_TOEPLITZ_HANKEL,
             {'box': [0.3, 0.7], 'variant': 'O+odd'},
             sizes=(16, 32, 64), tolerance=0.05,
             reference='Toeplitz+Hankel Fisher-Hartwig formula, O+(2N+1) '
                       'for mixed boundary conditions'),
    CaseSpec('sp-cosine-pair', KIND_CN_LAMBDA,
             {'symbol': {'singularities': [{'theta': 1.2, 'a': 0.5},
                                           {'theta': -1.2, 'a': 0.5}]},
              'lambda1': 0.5, 'lambda2': 0.5},
             sizes=(16, 32, 64), tolerance=0.05,
             reference='C_N(lambda1, lambda2) extension of the '
                       'Toeplitz+Hankel formula, Sp(N)'),
    CaseSpec('cn-lambda-0.25-0.75', KIND_CN_LAMBDA,
             {'symbol': {'singularities': [{'theta': 1.2, 'a': 0.5},
                                           {'theta': -1.2, 'a': 0.5}]},
              'lambda1': 0.25, 'lambda2': 0.75},
             sizes=(6, 10, 14), tier=TIER_EXTENDED, tolerance=0.1,
             reference='C_N(lambda1, lambda2) extension of the '
                       'Toeplitz+Hankel formula'),
    CaseSpec('hankel-gue-q1-y0.3', KIND_HANKEL_GUE,
             {'points': [0.3], 'exponents': [1.0]},
             sizes=(4, 8, 12), tier=TIER_EXTENDED, tolerance=0.1,
             reference='GUE Fisher-Hartwig form with the Gaussian '
                       'fluctuation term'),
    CaseSpec('hankel-lue-q1-y0.5', KIND_HANKEL_LUE,
             {'points': [0.5], 'exponents': [1.0], 'aprime': 1.0},
             sizes=(4, 8, 12), tier=TIER_EXTENDED, tolerance=0.1,
             reference='LUE Fisher-Hartwig form on the half line'),
    CaseSpec('gue-mc-q0.5-y0', KIND_HANKEL_GUE,
             {'points': [0.0], 'exponents': [0.5]},
             sizes=(50,), samples=100000, seed=20240601, tolerance=0.1,
             reference='GUE Fisher-Hartwig form by exact eigenvalue '
                       'sampling'),
    CaseSpec('lue-mc-q0.5-y0.5', KIND_HANKEL_LUE,
             {'points': [0.5], 'exponents': [0.5], 'aprime': 1.0},
             sizes=(50,), samples=100000, seed=20240601, tolerance=0.1,
             reference='LUE Fisher-Hartwig form by exact eigenvalue '
                       'sampling'),
)


def case_ids():
    """Return the ids of the built-in cases in catalog order."""
    return [spec.case_id for spec in CATALOG]


def find_case(case_id):
    """Return the built-in case with this id."""
    for spec in CATALOG:
        if spec.case_id == case_id:
            return spec
    raise CaseError('unknown case "%s"' % case_id)
