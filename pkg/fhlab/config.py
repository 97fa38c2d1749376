# -*- coding: utf-8 -*-
#
# config.py - configuration for fhlab
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


"""Configuration for fhlab."""

import configparser
import os

from pathlib import Path

from fhlab.lab.determinants import PrecisionContext, TIERS
from fhlab.lab.errors import CaseError
from fhlab.lab.harness import RunOptions

CONFIG_DIR = '%s/.config/fhlab' % os.getenv('HOME')
CONFIG_FILENAME = '%s/fhlab.conf' % CONFIG_DIR

CONFIG_DEFAULT_SECTIONS = ('precision', 'symbols', 'sampling', 'harness')
CONFIG_DEFAULT_OPTIONS = (('precision.tier', 'double'),
                          ('precision.dps', '30'),
                          ('precision.hankel_extra_dps', '2'),
                          ('symbols.singular_table', '32768'),
                          ('sampling.chains', '64'),
                          ('sampling.record_every', '4'),
                          ('sampling.burn_fraction', '0.25'),
                          ('sampling.target_acceptance', '0.4'),
                          ('harness.out_dir', '.'),
                          ('harness.jobs', '1'),
                          ('harness.timings', 'off'))


def read(filename=CONFIG_FILENAME):
    """Read config file."""
    config = configparser.RawConfigParser()
    if os.path.isfile(filename):
        config.read(filename)

    # add missing sections/options
    for section in CONFIG_DEFAULT_SECTIONS:
        if not config.has_section(section):
            config.add_section(section)
    for option in reversed(CONFIG_DEFAULT_OPTIONS):
        section, name = option[0].split('.', 1)
        if not config.has_option(section, name):
            config.set(section, name, option[1])
    return config


def write(config, filename=CONFIG_FILENAME):
    """Write config file."""
    Path(os.path.dirname(filename)).mkdir(mode=0o0700, parents=True,
                                          exist_ok=True)
    with open(filename, 'w') as cfg:
        config.write(cfg)


def precision_context(config, tier=None):
    """
    Return the PrecisionContext of the config.

    The tier comes from the argument, then from the environment variable
    FHLAB_PRECISION, then from the file.
    """
    tier = (tier or os.getenv('FHLAB_PRECISION')
            or config.get('precision', 'tier'))
    if tier not in TIERS:
        raise CaseError('unknown precision tier "%s"' % tier)
    return PrecisionContext(
        tier=tier, dps=config.getint('precision', 'dps'),
        hankel_extra_dps=config.getint('precision', 'hankel_extra_dps'))


def sampling_options(config):
    """Return the CbetaE sampler keyword arguments of the config."""
    return {
        'chains': config.getint('sampling', 'chains'),
        'record_every': config.getint('sampling', 'record_every'),
        'burn_fraction': config.getfloat('sampling', 'burn_fraction'),
        'target_acceptance': config.getfloat('sampling',
                                             'target_acceptance'),
    }


def run_options(config):
    """
    Return the RunOptions of verification runs: case tiers lifted by the
    file tier, digits, singular table size and sampler settings.
    """
    tier = config.get('precision', 'tier')
    if tier not in TIERS:
        raise CaseError('unknown precision tier "%s"' % tier)
    return RunOptions(
        tier=tier, dps=config.getint('precision', 'dps'),
        hankel_extra_dps=config.getint('precision', 'hankel_extra_dps'),
        table_size=config.getint('symbols', 'singular_table'),
        sampling=sampling_options(config))
