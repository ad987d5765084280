# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

import os
from setuptools import setup

README = """
See the README on `GitHub
<https://github.com/uw-it-aca/uw-restclients-reallinear>`_.
"""

version_path = 'uw_reallinear/VERSION'
VERSION = open(os.path.join(os.path.dirname(__file__), version_path)).read()
VERSION = VERSION.replace("\n", "")

# allow setup.py to be run from any path
os.chdir(os.path.normpath(os.path.join(os.path.abspath(__file__), os.pardir)))

setup(
    name='UW-RestClients-RealLinear',
    version=VERSION,
    packages=['uw_reallinear', 'uw_reallinear.util'],
    author="UW-IT T&LS",
    author_email="aca-it@uw.edu",
    include_package_data=True,
    package_data={'uw_reallinear': ['VERSION', 'resources/golden/*.json']},
    install_requires=['UW-RestClients-Core',
                      'numpy',
                      ],
    extras_require={'test': ['nose2', 'hypothesis']},
    entry_points={
        'console_scripts': ['reallinear=uw_reallinear.cli:main'],
    },
    license='Apache License, Version 2.0',
    description=('Real-linear maps and lattices in C^n: canonical forms, '
                 'equivalence and quotient tori'),
    long_description=README,
    url="https://github.com/uw-it-aca/uw-restclients-reallinear",
    classifiers=[
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
    ],
)
