# -*- coding: utf-8 -*-
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

from setuptools import setup
from fhlab.version import fhlab_version

DESCRIPTION = 'Verification laboratory for Fisher-Hartwig asymptotics'

setup(
    name='fhlab',
    version=fhlab_version(),
    description=DESCRIPTION,
    long_description=DESCRIPTION,
    author='The fhlab authors',
    license='GPL3',
    keywords='toeplitz hankel determinant fisher-hartwig random-matrix',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 '
        'or later (GPLv3+)',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    packages=['fhlab', 'fhlab.lab'],
    python_requires='>=3.8',
    entry_points={
        'console_scripts': [
            'fhlab = fhlab.fhlab:main',
        ]
    },
    install_requires=[
        'numpy',
        'scipy',
        'mpmath',
    ],
    extras_require={
        'test': ['pytest'],
    },
)
