# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
GL(C^n) modulo the unitary group: group membership, Gram forms, the
positive-definite square root and the polar decomposition.
"""

import logging
import numpy as np
from uw_reallinear.config import resolve_tolerance
from uw_reallinear.exceptions import (
    InternalConsistencyError, NotInSL, NotPositiveDefinite, SingularMatrix)
from uw_reallinear.kernel import (
    EPS, as_matrix, det, hermitian_eig, rank_ratio_ok, require_square,
    right_divide, singular_values)
from uw_reallinear.models import GramForm, GroupMembership


logger = logging.getLogger(__name__)


def _matrix(value, name):
    m = value.P if isinstance(value, GramForm) else as_matrix(value, name)
    require_square(m, name)
    return m


def _sl_slack(n, tol):
    return tol.rel * n + tol.abs


def classify(A, tol=None):
    """
    Membership of A in GL, SL, U and SU, with the witness values
    |det A|, ||A*A - I|| and |det A - 1|.
    """
    tol = resolve_tolerance(tol)
    a = _matrix(A, "classify")
    n = a.shape[0]
    in_gl = rank_ratio_ok(singular_values(a), tol)
    d = det(a)
    det_defect = abs(d - 1.0)
    unitarity_defect = float(np.linalg.norm(a.conj().T @ a - np.eye(n)))
    in_sl = in_gl and det_defect <= _sl_slack(n, tol)
    in_u = in_gl and unitarity_defect <= tol.rel * n
    return GroupMembership(in_GL=in_gl, in_SL=in_sl, in_U=in_u,
                           in_SU=in_u and in_sl, abs_det=abs(d),
                           unitarity_defect=unitarity_defect,
                           det_defect=det_defect)


def _require_invertible(a, op, tol):
    sv = singular_values(a)
    if not rank_ratio_ok(sv, tol):
        raise SingularMatrix(op, float(sv[-1]))
    return sv


def gram(A, tol=None):
    """
    P = A* A for invertible A
    """
    tol = resolve_tolerance(tol)
    a = _matrix(A, "gram")
    _require_invertible(a, "gram", tol)
    p = a.conj().T @ a
    return GramForm((p + p.conj().T) / 2.0)


def unitarily_equivalent(A1, A2, tol=None):
    """
    A2 = T A1 for a unitary T iff gram(A1) = gram(A2).
    :return: (bool, T = A2 A1^{-1} or None)
    """
    tol = resolve_tolerance(tol)
    a1 = _matrix(A1, "unitarily_equivalent A1")
    a2 = _matrix(A2, "unitarily_equivalent A2")
    p1 = gram(a1, tol).P
    p2 = gram(a2, tol).P
    if p1.shape != p2.shape:
        return False, None
    diff = float(np.linalg.norm(p1 - p2))
    bound = tol.rel * (np.linalg.norm(a1) ** 2 + np.linalg.norm(a2) ** 2)
    if diff > bound:
        logger.debug({'op': 'unitarily_equivalent', 'diff': diff,
                      'bound': bound})
        return False, None
    t = right_divide(a2, a1, tol)
    membership = classify(t, tol)
    if not membership.in_U:
        # T*T - I = A1^{-*} (P2 - P1) A1^{-1}
        sv = singular_values(a1)
        allowed = (bound / sv[-1] ** 2) + tol.rel * a1.shape[0]
        if membership.unitarity_defect > allowed:
            logger.error({'op': 'unitarily_equivalent',
                          'defect': membership.unitarity_defect,
                          'allowed': allowed})
            raise InternalConsistencyError("unitary witness",
                                           membership.unitarity_defect)
        logger.info({'op': 'unitarily_equivalent', 'boundary': True,
                     'defect': membership.unitarity_defect})
    return True, t


def _eig_positive(p, op, tol):
    values, vectors = hermitian_eig(p, tol)
    if values[0] <= tol.abs:
        raise NotPositiveDefinite(op, float(values[0]))
    return values, vectors


def _hermitian(v, diag):
    q = (v * diag) @ v.conj().T
    return (q + q.conj().T) / 2.0


def spd_sqrt(P, tol=None):
    """
    The unique self-adjoint positive-definite Q with Q Q = P.
    """
    tol = resolve_tolerance(tol)
    values, v = _eig_positive(_matrix(P, "spd_sqrt"), "spd_sqrt", tol)
    return GramForm(_hermitian(v, np.sqrt(values)))


def from_gram(P, tol=None):
    """
    An invertible A with gram(A) = P; the positive square root serves.
    """
    return spd_sqrt(P, tol).P.copy()


def polar(A, tol=None):
    """
    A = U P with U unitary and P = spd_sqrt(gram(A)).
    :return: (U, GramForm P)
    """
    tol = resolve_tolerance(tol)
    a = _matrix(A, "polar")
    values, v = _eig_positive(gram(a, tol).P, "polar", tol)
    root = np.sqrt(values)
    u = (a @ v * (1.0 / root)) @ v.conj().T
    return u, GramForm(_hermitian(v, root))


def sl_normalize(A, tol=None):
    """
    delta^{-1} A with delta the principal n-th root of det A, so the
    argument of delta lies in (-pi/n, pi/n].
    """
    tol = resolve_tolerance(tol)
    a = _matrix(A, "sl_normalize")
    _require_invertible(a, "sl_normalize", tol)
    n = a.shape[0]
    d = det(a)
    delta = abs(d) ** (1.0 / n) * np.exp(1j * np.angle(d) / n)
    logger.debug({'op': 'sl_normalize', 'n': n, 'det': [d.real, d.imag]})
    return a / delta


def su_sl_canonical(B, tol=None):
    """
    Gram form of B in SL; its determinant is 1.
    """
    tol = resolve_tolerance(tol)
    b = _matrix(B, "su_sl_canonical")
    membership = classify(b, tol)
    if not membership.in_SL:
        raise NotInSL("su_sl_canonical", membership.det_defect)
    p = gram(b, tol)
    n = b.shape[0]
    slack = _sl_slack(n, tol)
    defect = abs(det(p.P) - 1.0)
    if defect > 2 * slack + slack * slack + 64 * n * EPS:
        logger.error({'op': 'su_sl_canonical', 'det_defect': defect})
        raise InternalConsistencyError("su_sl_canonical", defect)
    return p


def special_unitarily_equivalent(B1, B2, tol=None):
    """
    B2 = T B1 with T in SU, for B1 and B2 in SL.
    :return: (bool, T or None)
    """
    tol = resolve_tolerance(tol)
    for name, b in (("B1", B1), ("B2", B2)):
        membership = classify(b, tol)
        if not membership.in_SL:
            raise NotInSL("special_unitarily_equivalent " + name,
                          membership.det_defect)
    equivalent, t = unitarily_equivalent(B1, B2, tol)
    if not equivalent:
        return False, None
    n = t.shape[0]
    det_defect = abs(det(t) - 1.0)
    if det_defect > 2 * _sl_slack(n, tol):
        logger.info({'op': 'special_unitarily_equivalent',
                     'det_defect': det_defect})
        return False, None
    return True, t
