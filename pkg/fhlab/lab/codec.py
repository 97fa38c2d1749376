# -*- coding: utf-8 -*-
#
# codec.py - JSON and CSV documents of the laboratory
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

#
# Symbol documents:
#
#   {"smooth": {"type": "two-t-cos", "params": {"t": 0.5}},
#    "singularities": [{"theta": 3.14159, "a": 0.5, "b": 0.0}]}
#
# or, with explicit log coefficients c_p:
#
#   {"smooth": {"coeffs": [[1, 0.5, 0.0], [-1, 0.5, 0.0]]}, ...}
#

"""Decode and encode symbol, case and result documents."""

import collections
import csv
import json
import math

from fhlab.lab import symbols
from fhlab.lab.cases import CaseSpec
from fhlab.lab.errors import CaseError, SymbolError
from fhlab.lab.symbols import FHSymbol, FourierSeries, Singularity

RECORDS_HEADER = ('case', 'n', 'log_exact', 'phase_exact', 'log_pred',
                  'ratio', 'stderr', 'seconds')
PHYSICS_HEADER = ('exact', 'predicted', 'ratio')

_CASE_FIELDS = ('case_id', 'kind', 'params', 'sizes', 'tier', 'samples',
                'seed', 'tolerance', 'reference')


class LabDict(collections.OrderedDict):
    def __str__(self):
        return '{%s}' % ', '.join(
            ['%s: %s' % (key, _str_value(self[key])) for key in self])


class LabObjects(list):
    def __init__(self, separator='\n'):
        super().__init__()
        self.separator = separator

    def __str__(self):
        return self.separator.join([str(obj) for obj in self])


def _str_value(value):
    if isinstance(value, float):
        return '%.12g' % value
    if isinstance(value, str):
        return '\'%s\'' % value
    return str(value)


def _float(value):
    """Return value as float, None for missing or infinite values."""
    if value is None:
        return None
    value = float(value)
    if not math.isfinite(value):
        return None
    return value


def _complex_pair(value):
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        return None
    return [value.real, value.imag]


def _csv_float(value):
    return '' if value is None else repr(float(value))


class Codec:
    """Decode and encode laboratory documents."""

    def __init__(self):
        self._smooth_cb = {
            'zero': self._smooth_zero,
            'two-t-cos': self._smooth_two_t_cos,
            'log-poly': self._smooth_log_poly,
            'ising-row': self._smooth_ising_row,
            'ising-critical': self._smooth_ising_critical,
            'ising-hight-transformed': self._smooth_ising_transformed,
        }

    @staticmethod
    def _param(params, name, default=None):
        if name in params:
            return float(params[name])
        if default is None:
            raise SymbolError('smooth part misses parameter "%s"' % name)
        return default

    def _smooth_zero(self, params):
        """Read a constant symbol a = 1."""
        return FHSymbol()

    def _smooth_two_t_cos(self, params):
        """Read a smooth symbol exp(2 t cos theta)."""
        t = self._param(params, 't')
        return FHSymbol(FourierSeries.from_terms({1: t, -1: t}))

    def _smooth_log_poly(self, params):
        """Read a smooth symbol exp(sum_k t_k cos k theta), t_0 first."""
        terms = params.get('t')
        if not isinstance(terms, list) or not terms:
            raise SymbolError('log-poly needs a non-empty list "t"')
        coeffs = {0: float(terms[0])}
        for k, t_k in enumerate(terms[1:], start=1):
            coeffs[k] = 0.5 * float(t_k)
            coeffs[-k] = 0.5 * float(t_k)
        return FHSymbol(FourierSeries.from_terms(coeffs))

    def _smooth_ising_row(self, params):
        """Read a row correlation symbol (any temperature)."""
        return symbols.ising_row_symbol(self._param(params, 'alpha1'),
                                        self._param(params, 'alpha2'))

    def _smooth_ising_critical(self, params):
        """Read a critical row correlation symbol (alpha2 = 1)."""
        return symbols.ising_row_symbol(self._param(params, 'alpha1'), 1.0)

    def _smooth_ising_transformed(self, params):
        """Read a high-temperature row symbol moved to |z| = alpha2."""
        sym, _ = symbols.ising_highT_transformed_symbol(
            self._param(params, 'alpha1'), self._param(params, 'alpha2'))
        return sym

    def _smooth_coeffs(self, rows):
        """Read explicit coefficients [[p, re, im], ...]."""
        terms = {}
        for row in rows:
            if len(row) != 3:
                raise SymbolError('coefficient rows are [p, re, im]')
            p = int(row[0])
            terms[p] = terms.get(p, 0j) + complex(float(row[1]),
                                                 float(row[2]))
        return FHSymbol(FourierSeries.from_terms(terms))

    def _singularity(self, doc):
        """Read a singularity {theta, a, b}."""
        try:
            return Singularity(float(doc['theta']), float(doc.get('a', 0.0)),
                               float(doc.get('b', 0.0)))
        except (KeyError, TypeError) as exc:
            raise SymbolError('malformed singularity %r' % (doc,)) from exc

    def decode_symbol(self, doc):
        """Return the FHSymbol of a symbol document."""
        if not isinstance(doc, dict):
            raise SymbolError('symbol document must be an object')
        smooth = doc.get('smooth') or {'type': 'zero'}
        if 'coeffs' in smooth:
            base = self._smooth_coeffs(smooth['coeffs'])
        else:
            family = smooth.get('type')
            if family not in self._smooth_cb:
                raise SymbolError('unknown smooth family "%s"' % family)
            base = self._smooth_cb[family](smooth.get('params') or {})
        extra = tuple(self._singularity(item)
                      for item in doc.get('singularities', ()))
        return FHSymbol(base.smooth_log, base.singularities + extra)

    def encode_symbol(self, sym):
        """Return the document of an FHSymbol (explicit coefficients)."""
        series = sym.smooth_log
        rows = []
        for p in range(-series.order, series.order + 1):
            value = complex(series[p])
            if value != 0:
                rows.append([p, value.real, value.imag])
        return {
            'smooth': {'coeffs': rows},
            'singularities': [{'theta': s.theta, 'a': s.a, 'b': s.b}
                              for s in sym.singularities],
        }

    def encode_prediction(self, prediction):
        """Return the document of a Prediction."""
        return LabDict([
            ('formula', prediction.formula),
            ('coeff_n', _complex_pair(prediction.coeff_n)),
            ('coeff_logn', float(prediction.coeff_logn)),
            ('log_constant', None if prediction.degenerate
             else _complex_pair(prediction.log_constant)),
            ('n_convention', prediction.n_convention),
            ('degenerate', bool(prediction.degenerate)),
            ('proved_regime', prediction.proved_regime),
        ])

    def encode_logdet(self, value):
        """Return the document of a LogValue or LogDet."""
        return LabDict([
            ('log_modulus', _float(value.log_modulus)),
            ('phase', float(value.phase)),
            ('zero', bool(value.zero)),
        ])

    def encode_record(self, record):
        """Return the document of a VerificationRecord."""
        return LabDict([
            ('n', record.n),
            ('exact', None if record.exact is None
             else self.encode_logdet(record.exact)),
            ('predicted', None if record.predicted is None
             else self.encode_logdet(record.predicted)),
            ('ratio', _float(record.ratio)),
            ('stderr', _float(record.stderr)),
            ('degenerate', record.degenerate),
            ('error', record.error),
        ])

    def encode_result(self, result):
        """Return the JSON summary of a CaseResult."""
        spec = result.spec
        fit = result.fit
        return LabDict([
            ('case', spec.case_id),
            ('kind', spec.kind),
            ('reference', spec.reference),
            ('formula', None if result.prediction is None
             else result.prediction.formula),
            ('prediction', None if result.prediction is None
             else self.encode_prediction(result.prediction)),
            ('spec', self.encode_case(spec)),
            ('passed', result.passed),
            ('degenerate', result.degenerate),
            ('fit', None if fit is None else LabDict([
                ('log_slope', _float(fit.log_slope)),
                ('log_residual', _float(fit.log_residual)),
                ('a', _float(fit.a)),
                ('b', _float(fit.b)),
                ('residual', _float(fit.residual)),
            ])),
            ('records', [self.encode_record(r) for r in result.records]),
        ])

    def decode_case(self, doc):
        """Return the CaseSpec of a one-case document."""
        if not isinstance(doc, dict):
            raise CaseError('case document must be an object')
        unknown = set(doc) - set(_CASE_FIELDS)
        if unknown:
            raise CaseError('unknown case fields: %s'
                            % ', '.join(sorted(unknown)))
        if 'case_id' not in doc or 'kind' not in doc:
            raise CaseError('case document needs "case_id" and "kind"')
        return CaseSpec(**doc)

    def encode_case(self, spec):
        """Return the document of a CaseSpec."""
        doc = LabDict()
        for name in _CASE_FIELDS:
            value = getattr(spec, name)
            doc[name] = list(value) if isinstance(value, tuple) else value
        return doc


_codec = Codec()


def decode_symbol(doc):
    """Return the FHSymbol of a symbol document."""
    return _codec.decode_symbol(doc)


def encode_symbol(sym):
    """Return the document of an FHSymbol."""
    return _codec.encode_symbol(sym)


def encode_prediction(prediction):
    """Return the document of a Prediction."""
    return _codec.encode_prediction(prediction)


def encode_logdet(value):
    """Return the document of a LogValue."""
    return _codec.encode_logdet(value)


def encode_result(result):
    """Return the JSON summary of a CaseResult."""
    return _codec.encode_result(result)


def read_json(path):
    """Return the parsed JSON document at path."""
    try:
        with open(path, encoding='utf-8') as doc_file:
            return json.load(doc_file)
    except (OSError, ValueError) as exc:
        raise CaseError('cannot read "%s": %s' % (path, exc)) from exc


def write_json(path, doc):
    """Write doc as indented JSON."""
    with open(path, 'w', encoding='utf-8') as doc_file:
        json.dump(doc, doc_file, indent=2)
        doc_file.write('\n')


def load_case(path):
    """Return the CaseSpec of a one-case JSON file."""
    return _codec.decode_case(read_json(path))


def load_symbol(path):
    """Return the FHSymbol of a symbol JSON file."""
    doc = read_json(path)
    return _codec.decode_symbol(doc.get('symbol', doc))


def write_records_csv(path, records, timings=False):
    """
    Write verification records with the fixed header.

    Floats are written with repr so that reruns are byte-identical;
    the seconds column stays empty unless timings is set.
    """
    with open(path, 'w', newline='', encoding='utf-8') as csv_file:
        writer = csv.writer(csv_file, lineterminator='\n')
        writer.writerow(RECORDS_HEADER)
        for record in records:
            exact = record.exact
            writer.writerow([
                record.case_id,
                record.n,
                '' if exact is None or exact.zero
                else _csv_float(exact.log_modulus),
                '' if exact is None else _csv_float(exact.phase),
                '' if record.predicted is None
                else _csv_float(record.predicted.log_modulus),
                _csv_float(record.ratio),
                _csv_float(record.stderr),
                _csv_float(record.seconds) if timings else '',
            ])


def write_moments_csv(path, moments):
    """Write a MomentTable as k,re,im rows."""
    with open(path, 'w', newline='', encoding='utf-8') as csv_file:
        writer = csv.writer(csv_file, lineterminator='\n')
        writer.writerow(('k', 're', 'im'))
        for k, re_part, im_part in moments.rows():
            writer.writerow([k, repr(float(re_part)), repr(float(im_part))])


def write_samples_csv(path, batch):
    """Write a SampleBatch, one row per sample (chain, weight, x_1..x_n)."""
    with open(path, 'w', newline='', encoding='utf-8') as csv_file:
        writer = csv.writer(csv_file, lineterminator='\n')
        writer.writerow(['chain', 'weight']
                        + ['x%d' % (i + 1) for i in range(batch.particles)])
        for chain, weight, row in zip(batch.chain, batch.weights,
                                      batch.samples):
            writer.writerow([int(chain), repr(float(weight))]
                            + [repr(float(x)) for x in row])


def write_physics_csv(path, label, rows):
    """
    Write (size, exact, predicted, ratio) rows under the header
    label,exact,predicted,ratio; missing values stay empty.
    """
    with open(path, 'w', newline='', encoding='utf-8') as csv_file:
        writer = csv.writer(csv_file, lineterminator='\n')
        writer.writerow((label,) + PHYSICS_HEADER)
        for size, exact, predicted, ratio in rows:
            writer.writerow([int(size), _csv_float(exact),
                             _csv_float(predicted), _csv_float(ratio)])
