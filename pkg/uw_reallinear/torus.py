# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
The quotient C^n / L as an additive group. Points are reduced into the
half-open parallelepiped [0, 1)^{2n} of generator coordinates.
"""

import logging
import math
import numpy as np
from uw_reallinear.config import resolve_tolerance
from uw_reallinear.exceptions import InternalConsistencyError, LatticeMismatch
from uw_reallinear.kernel import as_vector, realify_columns, solve
from uw_reallinear.lattice import same_lattice
from uw_reallinear.models import TorusPoint


logger = logging.getLogger(__name__)


def _grid_step(tol):
    """
    Coordinates are snapped to multiples of a power of two no larger
    than tol.abs, so reducing a reduced point changes nothing.
    """
    if tol.abs <= 0:
        return None
    return 2.0 ** math.floor(math.log2(tol.abs))


def _coordinates(L, z, tol):
    r = realify_columns(L.G)
    return solve(r, np.concatenate([z.real, z.imag]), tol).real


def reduce(L, z, tol=None):
    """
    :return: TorusPoint whose coordinates are the fractional parts of
    the generator coordinates of z
    """
    tol = resolve_tolerance(tol)
    z = as_vector(z, L.n, "z")
    coords = _coordinates(L, z, tol)
    frac = coords - np.floor(coords)
    step = _grid_step(tol)
    if step is not None:
        frac = np.round(frac / step) * step
    frac[frac >= 1.0 - tol.abs] = 0.0
    shift = coords - frac
    defect = float(np.max(np.abs(shift - np.round(shift))))
    if defect > tol.rel * max(1.0, float(np.max(np.abs(coords)))) + tol.abs:
        logger.error({'op': 'reduce', 'defect': defect})
        raise InternalConsistencyError("reduce", defect)
    return TorusPoint(L, L.G @ frac, frac)


def _require_same(p, q, tol):
    if p.lattice is q.lattice:
        return
    if p.lattice.n != q.lattice.n or \
            not same_lattice(p.lattice, q.lattice, tol)[0]:
        raise LatticeMismatch("torus", (p.lattice.n, q.lattice.n))


def torus_add(p, q, tol=None):
    tol = resolve_tolerance(tol)
    _require_same(p, q, tol)
    return reduce(p.lattice, p.rep + q.rep, tol)


def torus_eq(p, q, tol=None):
    """
    True iff the coordinate differences are integers within
    tol.rel + tol.abs, so 0 and 1 - 1e-13 compare equal.
    """
    tol = resolve_tolerance(tol)
    _require_same(p, q, tol)
    if q.lattice is not p.lattice:
        q = reduce(p.lattice, q.rep, tol)
    diff = np.array(p.coords) - np.array(q.coords)
    return bool(np.all(np.abs(diff - np.round(diff)) <= tol.rel + tol.abs))


def torus_zero(L):
    return TorusPoint(L, np.zeros(L.n, dtype=complex),
                      [0.0] * (2 * L.n))


def torus_neg(p, tol=None):
    return reduce(p.lattice, -p.rep, tol)
