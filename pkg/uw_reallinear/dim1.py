# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Closed forms for n = 1. The map x + iy -> a x + i b y is also
a (x + i c y), alpha z + beta conj(z) and, when |alpha| > |beta|,
theta (z + mu conj(z)). Scalar arithmetic only; the matrix modules
serve as cross-checks.
"""

import logging
from uw_reallinear.config import resolve_tolerance
from uw_reallinear.exceptions import (
    InternalConsistencyError, MajorizationFails)
from uw_reallinear.models import (
    ConjugatePairForm, NormalizedForm, ScalarForms)
from uw_reallinear import reallinear


logger = logging.getLogger(__name__)
HOLOMORPHIC_DOMINANT = 'holomorphic_dominant'
ANTIHOLOMORPHIC_DOMINANT = 'antiholomorphic_dominant'
DEGENERATE = 'degenerate'
BOUNDARY = 'boundary'


def from_ab(a, b, tol=None):
    """
    theta and mu are filled only when |beta| < |alpha| holds with the
    margin to_thetamu demands.
    """
    a = complex(a)
    b = complex(b)
    alpha = (a + b) / 2
    beta = (a - b) / 2
    c = b / a if a != 0 else None
    theta = mu = None
    if reallinear.strict_status(abs(beta), abs(alpha), tol) == \
            reallinear.STRICT:
        theta = alpha
        mu = beta / alpha
    return ScalarForms(a, b, alpha, beta, c=c, theta=theta, mu=mu)


def evaluate(f, z):
    """
    a x + i b y at z = x + iy
    """
    z = complex(z)
    return f.a * z.real + 1j * f.b * z.imag


def _ratio(f):
    total = abs(f.alpha) + abs(f.beta)
    if total == 0:
        return 0.0
    return (abs(f.alpha) - abs(f.beta)) / total


def is_invertible_1d(f, tol=None):
    """
    |alpha| != |beta| with margin tol.rel (|alpha| + |beta|), checked
    against the realified singular values.
    """
    tol = resolve_tolerance(tol)
    gap = abs(abs(f.alpha) - abs(f.beta))
    result = gap > tol.rel * (abs(f.alpha) + abs(f.beta))
    general = reallinear.is_invertible(to_conjugate_pair(f), tol)
    if result != general:
        # both criteria read the same ratio of singular values
        if abs(abs(_ratio(f)) - tol.rel) > tol.rel:
            logger.error({'op': 'is_invertible_1d', 'scalar': result,
                          'realify': general})
            raise InternalConsistencyError("is_invertible_1d", _ratio(f))
        logger.info({'op': 'is_invertible_1d', 'boundary': True,
                     'ratio': _ratio(f)})
    return result


def classify_1d(f, tol=None):
    """
    :return: 'holomorphic_dominant' (|alpha| > |beta|),
    'antiholomorphic_dominant' (|alpha| < |beta|), 'degenerate'
    (|alpha| = |beta|) or 'boundary' when the two moduli differ by less
    than the margin
    """
    tol = resolve_tolerance(tol)
    s = _ratio(f)
    if s > tol.rel:
        return HOLOMORPHIC_DOMINANT
    if s < -tol.rel:
        return ANTIHOLOMORPHIC_DOMINANT
    if abs(f.alpha) == abs(f.beta):
        return DEGENERATE
    return BOUNDARY


def to_conjugate_pair(f):
    """
    alpha z + beta conj(z) = M z + conj(N z) with M = alpha,
    N = conj(beta)
    """
    return ConjugatePairForm([[f.alpha]], [[f.beta.conjugate()]])


def to_thetamu(f, tol=None):
    """
    :return: (theta, mu) with theta (z + mu conj(z)) = alpha z + beta conj(z)
    raise MajorizationFails unless |alpha| > |beta| with margin
    """
    tol = resolve_tolerance(tol)
    if reallinear.strict_status(abs(f.beta), abs(f.alpha), tol) != \
            reallinear.STRICT:
        raise MajorizationFails("to_thetamu", [abs(f.alpha), abs(f.beta)])
    theta = f.alpha
    mu = f.beta / f.alpha
    scale = abs(f.alpha) + abs(f.beta)
    for z in (1, 1j):
        lhs = theta * (z + mu * z.conjugate())
        rhs = f.alpha * z + f.beta * z.conjugate()
        if abs(lhs - rhs) > tol.rel * scale + tol.abs:
            raise InternalConsistencyError("to_thetamu", abs(lhs - rhs))
    return theta, mu


def to_normalized(f, tol=None):
    """
    theta (z + mu conj(z)) = G (z + conj(E z)) with G = theta,
    E = conj(mu)
    """
    theta, mu = to_thetamu(f, tol)
    return NormalizedForm([[mu.conjugate()]], [[theta]])
