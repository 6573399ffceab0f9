#!/usr/bin/env python
# -*- coding: utf-8 -*-
# allows pip install of the NegStat scripts and library

import io
import os
from setuptools import setup

# Package meta-data.
NAME = 'NegStat'
DESCRIPTION = 'Signed permutation statistics, descent classes and q-series identities of Coxeter groups of type A, B and D'
URL = ''
EMAIL = ''
AUTHOR = 'The NegStat developers'
REQUIRES_PYTHON = '>=3.8.0'
VERSION = '1.0.0'

# What packages are required for this module to be executed?
REQUIRED = [
  'numpy',
  'sympy',
]

# What packages are optional?
EXTRAS = {
  'tests': ['pytest'],
}

here = os.path.abspath(os.path.dirname(__file__))

# Import the README and use it as the long-description.
try:
    with io.open(os.path.join(here, 'README.md'), encoding='utf-8') as f:
        long_description = '\n' + f.read()
except FileNotFoundError:
    long_description = DESCRIPTION

about = {'__version__': VERSION}


# Where the magic happens:
setup(
    name=NAME,
    version=about['__version__'],
    description=DESCRIPTION,
    long_description=long_description,
    long_description_content_type='text/markdown',
    author=AUTHOR,
    author_email=EMAIL,
    python_requires=REQUIRES_PYTHON,
    url=URL,
    package_dir={'': 'NegStat_lib'},
    py_modules=['NegStat_meta', 'NegStat_perm_lib', 'NegStat_qalg_lib', 'NegStat_enum_lib',
                'NegStat_identity_lib', 'NegStat_io_lib', 'NegStat_tools_lib'],
    scripts=['bin/NegStat_stats.py', 'bin/NegStat_class.py', 'bin/NegStat_verify.py',
             'bin/NegStat_group.py', 'bin/NegStat_check_install.py'],
    install_requires=REQUIRED,
    extras_require=EXTRAS,
    license='GNU GPL3',
    classifiers=[
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: Implementation :: CPython',
    ],
)
