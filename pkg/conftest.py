# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

# Configure the commonconf backend for pytest, as uw_reallinear/test.py
# does for nose2.
from commonconf.backends import use_configparser_backend
from os.path import abspath, dirname
import os

use_configparser_backend(
    abspath(os.path.join(dirname(__file__), "conf", "test.conf")),
    'RealLinear')
