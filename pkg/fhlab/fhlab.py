# -*- coding: utf-8 -*-
#
# fhlab.py - command-line program of the fhlab laboratory
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


"""Command-line program for the Fisher-Hartwig verification laboratory."""

import argparse
import dataclasses
import json
import logging
import math
import os
import shlex
import sys
import traceback

from pathlib import Path

from fhlab import config
from fhlab.lab import (
    asymptotics, cases, codec, ensembles, harness, physics, sampling)
from fhlab.lab.errors import CaseError, DomainError, SymbolError
from fhlab.version import fhlab_version

log = logging.getLogger(__name__)

NAME = 'fhlab'

ENSEMBLES = {
    'U': ensembles.UNITARY,
    'Sp': ensembles.SYMPLECTIC,
    'O+even': ensembles.ORTHOGONAL_PLUS_EVEN,
    'O+odd': ensembles.ORTHOGONAL_PLUS_ODD,
    'O-odd': ensembles.ORTHOGONAL_MINUS_ODD,
}


class Lab:
    """Subcommands of the laboratory."""

    def __init__(self, args):
        self.args = args
        self.conf_path = getattr(args, 'conf', None) or config.CONFIG_FILENAME
        self.config = config.read(self.conf_path)
        self.ctx = config.precision_context(self.config,
                                            getattr(args, 'precision', None))
        self.options = config.run_options(self.config)

    def _forced_ctx(self):
        """Return the context forced by option or environment, else None."""
        if getattr(self.args, 'precision', None) or \
                os.getenv('FHLAB_PRECISION'):
            return self.ctx
        return None

    def _out_dir(self):
        out = getattr(self.args, 'out', None) or \
            self.config.get('harness', 'out_dir')
        Path(out).mkdir(parents=True, exist_ok=True)
        return out

    def _jobs(self):
        jobs = getattr(self.args, 'jobs', None)
        if jobs is None:
            jobs = self.config.getint('harness', 'jobs')
        return max(1, jobs)

    def _timings(self):
        return bool(getattr(self.args, 'timings', False)) or \
            self.config.getboolean('harness', 'timings')

    def _seed(self, default=0):
        seed = getattr(self.args, 'seed', None)
        return default if seed is None else seed

    def configure(self):
        """
        Print the configuration; with --set section.name=value, change
        the options and write the file first.
        Return 0.
        """
        for item in self.args.set or []:
            name, equal, value = item.partition('=')
            section, _, option = name.partition('.')
            if not equal or not self.config.has_option(section, option):
                raise CaseError('unknown configuration option "%s"' % name)
            self.config.set(section, option, value)
        if self.args.set:
            config.run_options(self.config)
            config.write(self.config, self.conf_path)
            log.info('configuration written to %s', self.conf_path)
        for section in self.config.sections():
            for option, value in self.config.items(section):
                print('%s.%s = %s' % (section, option, value))
        return 0

    def list_cases(self):
        """
        Print the built-in case catalog.
        Return 0.
        """
        for spec in cases.CATALOG:
            print('%-30s %-16s %s' % (spec.case_id, spec.kind,
                                      spec.reference))
        return 0

    def _selected_cases(self):
        specs = [cases.find_case(case_id) for case_id in self.args.case or []]
        specs.extend(codec.load_case(path) for path in self.args.config or [])
        if not specs:
            specs = list(cases.CATALOG)
        if self.args.seed is not None:
            specs = [dataclasses.replace(spec, seed=self.args.seed)
                     for spec in specs]
        return specs

    def verify(self):
        """
        Run the selected cases (all by default) or a factorization probe,
        writing <case>.csv and <case>.json in the output directory.
        Return 0 if every case passes, 1 otherwise.
        """
        if self.args.probe:
            return self._probe(self.args.probe)
        specs = self._selected_cases()
        results = harness.run_cases(specs, self._forced_ctx(), self._jobs(),
                                    self.options)
        out = self._out_dir()
        for result in results:
            case_id = result.spec.case_id
            codec.write_records_csv(os.path.join(out, '%s.csv' % case_id),
                                    result.records, self._timings())
            codec.write_json(os.path.join(out, '%s.json' % case_id),
                             codec.encode_result(result))
            print(result)
        failed = [r.spec.case_id for r in results if not r.passed]
        if failed:
            print('failed: %s' % ', '.join(failed))
            return 1
        return 0

    def _probe(self, path):
        doc = codec.read_json(path)
        if 'kind' not in doc or 'sizes' not in doc:
            raise CaseError('probe document needs "kind" and "sizes"')
        table = harness.run_factorization_probe(
            doc['kind'], doc.get('params', {}), doc['sizes'], self.ctx,
            samples=int(doc.get('samples', 0)),
            seed=self._seed(int(doc.get('seed', 0))), options=self.options)
        print(table)
        return 0

    def predict(self):
        """
        Print the JSON prediction of a symbol document.
        Return 0.
        """
        sym = codec.load_symbol(self.args.config)
        formula = self.args.formula
        if formula == 'auto':
            formula = 'fh' if sym.singularities else 'szego'
        if formula == 'szego':
            prediction = asymptotics.predict_szego(sym.smooth_log)
        elif formula == 'fh':
            prediction = asymptotics.predict_fh(sym)
        elif formula == 'beta':
            prediction = asymptotics.predict_beta_fh(sym, self.args.beta)
        else:
            prediction = asymptotics.predict_toeplitz_hankel(sym)
        doc = codec.encode_prediction(prediction)
        doc['symbol'] = codec.encode_symbol(sym)
        if self.args.n is not None:
            doc['n'] = self.args.n
            doc['value'] = None if prediction.degenerate else \
                codec.encode_logdet(prediction.evaluate(self.args.n))
        print(json.dumps(doc, indent=2))
        return 0

    def exact(self):
        """
        Print the JSON exact group average of a symbol document.
        Return 0.
        """
        sym = codec.load_symbol(self.args.config)
        ensemble = ensembles.EnsembleId(ENSEMBLES[self.args.ensemble],
                                        self.args.n)
        value = ensembles.group_average(
            ensemble, sym, self.ctx,
            table_size=self.config.getint('symbols', 'singular_table'))
        doc = codec.encode_logdet(value)
        doc['ensemble'] = str(ensemble)
        print(json.dumps(doc, indent=2))
        return 0

    def sample(self):
        """
        Sample an ensemble and write the samples as CSV.
        Return 0.
        """
        args = self.args
        seed = self._seed()
        if args.ensemble == 'cbeta':
            batch = sampling.cbeta_sample(
                args.n, args.beta, args.count, seed,
                **config.sampling_options(self.config))
        elif args.ensemble == 'gue':
            batch = sampling.gue_sample(args.n, args.count, seed)
        else:
            batch = sampling.lue_sample(args.n, args.aprime, args.count, seed)
        path = os.path.join(self._out_dir(), 'samples-%s-n%d.csv'
                            % (args.ensemble, args.n))
        codec.write_samples_csv(path, batch)
        print('%d samples of %d particles (acceptance %.3f) written to %s'
              % (batch.count, batch.particles, batch.acceptance, path))
        return 0

    def physics(self):
        """
        Write exact and leading-order values of an Ising correlation, a
        density matrix or the zero-momentum occupation, one row per size,
        to physics-<subject>.csv with the parameters in the JSON sidecar.
        Return 0.
        """
        args = self.args
        params = codec.LabDict([('subject', args.subject),
                                ('sizes', list(args.n))])
        label, rows = {
            'ising': self._physics_ising,
            'density': self._physics_density,
            'lambda0': self._physics_lambda0,
        }[args.subject](params)
        out = self._out_dir()
        name = 'physics-%s' % args.subject
        codec.write_physics_csv(os.path.join(out, '%s.csv' % name), label,
                                rows)
        codec.write_json(os.path.join(out, '%s.json' % name), params)
        print(params)
        for size, exact, predicted, ratio in rows:
            print(codec.LabDict([(label, size), ('exact', exact),
                                 ('predicted', predicted),
                                 ('ratio', ratio)]))
        return 0

    def _physics_ising(self, params):
        args = self.args
        point = physics.IsingPoint.from_alphas(args.alpha1, args.alpha2)
        prediction = physics.ising_prediction(point, args.direction)
        params.update([('alpha1', args.alpha1), ('alpha2', args.alpha2),
                       ('direction', args.direction),
                       ('regime', point.regime),
                       ('formula', prediction.formula)])
        rows = []
        for n in args.n:
            exact = physics.ising_correlation_logdet(point, args.direction,
                                                     n, self.ctx)
            predicted = prediction.evaluate(n)
            rows.append((n, _real(exact), _real(predicted),
                         harness.ratio_of(exact, predicted)))
        return 'n', rows

    def _physics_density(self, params):
        args = self.args
        params.update([('geometry', args.geometry), ('X', args.X),
                       ('Y', args.Y), ('aprime', args.aprime)])
        rows = []
        for N in args.n:
            spec = physics.DensityMatrixSpec(args.geometry, N, args.X,
                                             args.Y, aprime=args.aprime)
            exact = physics.bose_density_matrix(spec, self.ctx)
            try:
                predicted = physics.density_matrix_asymptotic(spec)
            except DomainError as exc:
                log.info('N=%d: %s', N, exc)
                predicted = None
            rows.append((N, exact, predicted,
                         None if not predicted else exact / predicted))
        return 'N', rows

    def _physics_lambda0(self, params):
        params['limit_constant'] = physics.lambda0_asymptotic_constant()
        rows = []
        for N in self.args.n:
            exact = physics.bose_lambda0(physics.GEOMETRY_CIRCLE, N,
                                         exact=True)
            predicted = physics.bose_lambda0(physics.GEOMETRY_CIRCLE, N,
                                             exact=False)
            rows.append((N, exact, predicted, exact / predicted))
        return 'N', rows


def _real(value):
    """Return the real part of a LogValue."""
    if value.zero:
        return 0.0
    return math.exp(value.log_modulus) * math.cos(value.phase)


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--conf', help='configuration file '
                        '(default: ~/.config/fhlab/fhlab.conf)')
    common.add_argument('--precision', choices=('double', 'extended'),
                        help='precision tier (default: from config)')
    common.add_argument('--out', help='output directory')
    common.add_argument('--seed', type=int,
                        help='seed for Monte Carlo sampling')
    common.add_argument('--jobs', type=int,
                        help='number of worker processes')
    common.add_argument('--timings', action='store_true',
                        help='write wall-clock seconds in CSV records')
    return common


def main():
    """Main function."""
    # parse command line arguments
    parser = argparse.ArgumentParser(
        formatter_class=argparse.RawDescriptionHelpFormatter,
        fromfile_prefix_chars='@',
        description='Verification laboratory for Fisher-Hartwig '
        'asymptotics.',
        epilog='''
Environment variable "FHLAB_OPTIONS" can be set with default options.
Environment variable "FHLAB_PRECISION" (double or extended) overrides the
precision tier of the configuration file.
Argument "@file.txt" can be used to read default options in a file.

Examples:
  {name} list-cases
  {name} verify --case lenard-X0.5 --out results
  {name} predict --config sym.json --n 64

The script returns:
  0: OK
  1: one or more selected cases failed
  2: wrong arguments (command line)
  3: unknown case or unreadable input document
  4: computation error
'''.format(name=NAME))
    parser.add_argument('-d', '--debug', action='count', default=0,
                        help='debug mode: show tracebacks and info logs '
                        '(-dd: debug logs)')
    parser.add_argument('-v', '--version', action='version',
                        version=fhlab_version())
    common = _common_options()
    commands = parser.add_subparsers(dest='command', metavar='command')

    commands.add_parser('list-cases', parents=[common],
                        help='print the built-in case catalog')

    conf = commands.add_parser('config', parents=[common],
                               help='print or change the configuration')
    conf.add_argument('--set', action='append', metavar='SECTION.NAME=VALUE',
                      help='option to change (repeatable)')

    verify = commands.add_parser('verify', parents=[common],
                                 help='run verification cases')
    verify.add_argument('--case', action='append',
                        help='built-in case id (repeatable)')
    verify.add_argument('--config', action='append',
                        help='case JSON document (repeatable)')
    verify.add_argument('--probe', help='factorization probe JSON document')

    predict = commands.add_parser('predict', parents=[common],
                                  help='print the prediction of a symbol')
    predict.add_argument('--config', required=True,
                         help='symbol JSON document')
    predict.add_argument('--n', type=int, help='size to evaluate at')
    predict.add_argument('--formula', default='auto',
                         choices=('auto', 'szego', 'fh', 'beta',
                                  'toeplitz-hankel'),
                         help='asymptotic formula (default: auto)')
    predict.add_argument('--beta', type=float, default=2.0,
                         help='CbetaE coupling for --formula beta')

    exact = commands.add_parser('exact', parents=[common],
                                help='print an exact group average')
    exact.add_argument('--config', required=True,
                       help='symbol JSON document')
    exact.add_argument('--n', type=int, required=True, help='group size')
    exact.add_argument('--ensemble', default='U', choices=sorted(ENSEMBLES),
                       help='classical group (default: U)')

    sample = commands.add_parser('sample', parents=[common],
                                 help='sample an ensemble to CSV')
    sample.add_argument('--ensemble', default='cbeta',
                        choices=('cbeta', 'gue', 'lue'))
    sample.add_argument('--n', type=int, required=True,
                        help='number of particles')
    sample.add_argument('--count', type=int, default=1000,
                        help='samples (sweeps for cbeta)')
    sample.add_argument('--beta', type=float, default=2.0)
    sample.add_argument('--aprime', type=float, default=1.0)

    phys = commands.add_parser('physics', parents=[common],
                               help='Ising and Bose gas quantities')
    phys.add_argument('subject', choices=('ising', 'density', 'lambda0'))
    phys.add_argument('--n', type=int, nargs='+', required=True,
                      help='separations, or numbers of bosons minus one')
    phys.add_argument('--alpha1', type=float, default=0.3)
    phys.add_argument('--alpha2', type=float, default=1.0)
    phys.add_argument('--direction', default=physics.DIRECTION_ROW,
                      choices=(physics.DIRECTION_ROW,
                               physics.DIRECTION_DIAGONAL))
    phys.add_argument('--geometry', default=physics.GEOMETRY_CIRCLE,
                      choices=physics.GEOMETRIES)
    phys.add_argument('--X', type=float, default=0.5)
    phys.add_argument('--Y', type=float, default=0.0)
    phys.add_argument('--aprime', type=float, default=1.0)

    if len(sys.argv) == 1:
        parser.print_help()
        sys.exit(0)
    _args = parser.parse_args(
        shlex.split(os.getenv('FHLAB_OPTIONS') or '') + sys.argv[1:])
    if not _args.command:
        parser.print_help()
        sys.exit(2)

    logging.basicConfig(
        level=(logging.WARNING, logging.INFO,
               logging.DEBUG)[min(_args.debug, 2)],
        format='%(levelname)s %(name)s: %(message)s')

    try:
        lab = Lab(_args)
        command = {
            'list-cases': lab.list_cases,
            'config': lab.configure,
            'verify': lab.verify,
            'predict': lab.predict,
            'exact': lab.exact,
            'sample': lab.sample,
            'physics': lab.physics,
        }[_args.command]
        returncode = command()
    except (CaseError, SymbolError) as exc:
        if _args.debug > 0:
            traceback.print_exc()
        print('%s: %s' % (NAME, exc), file=sys.stderr)
        sys.exit(3)
    except Exception:
        traceback.print_exc()
        print('%s: computation failed' % NAME, file=sys.stderr)
        sys.exit(4)
    sys.exit(returncode)


if __name__ == "__main__":
    main()
