# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Settings and tolerances. Values come from commonconf settings named
REALLINEAR_<NAME>; be sure to configure a backend (see test.py) if the
built-in defaults do not suit.
"""

import logging
from commonconf import settings
from restclients_core import models
from uw_reallinear.exceptions import InvalidTolerance


logger = logging.getLogger(__name__)

DEFAULTS = {
    'TOL_REL': 1e-9,
    'TOL_ABS': 1e-12,
    'HEIGHT': 2,
    'MAX_DIM': 3,
    'ENUM_BUDGET': 10000000,
    'RADIUS': 4.0,
    'JACOBI_SWEEPS': 100,
}


def get_setting(name):
    """
    :param name: a key of DEFAULTS
    :return: the configured value cast to the type of its default
    (configparser backends hand back strings)
    """
    default = DEFAULTS[name]
    value = getattr(settings, "REALLINEAR_{0}".format(name), default)
    try:
        if isinstance(default, int):
            return int(float(value))
        return type(default)(value)
    except (TypeError, ValueError):
        logger.error({'setting': name, 'value': value,
                      'fallback': default})
        return default


class Tolerance(models.Model):
    rel = models.FloatField(default=1e-9)
    abs = models.FloatField(default=1e-12)

    def to_json(self):
        return {'rel': self.rel, 'abs': self.abs}

    def __eq__(self, other):
        return self.rel == other.rel and self.abs == other.abs

    def __hash__(self):
        return super().__hash__()

    def __str__(self):
        return "Tolerance(rel={0}, abs={1})".format(self.rel, self.abs)

    def __init__(self, *args, **kwargs):
        super(Tolerance, self).__init__(*args, **kwargs)
        self.rel = float(self.rel)
        self.abs = float(self.abs)
        if not self.rel > 0 or not self.abs >= 0:
            raise InvalidTolerance("Tolerance", (self.rel, self.abs))


def default_tolerance():
    return Tolerance(rel=get_setting('TOL_REL'),
                     abs=get_setting('TOL_ABS'))


def resolve_tolerance(tol=None):
    return default_tolerance() if tol is None else tol
