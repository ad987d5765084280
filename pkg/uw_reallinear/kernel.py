# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Dense complex linear algebra for the small matrices (n <= 16) the rest
of the package works with: products, adjoints, pivoted elimination,
Jacobi eigen- and singular value decompositions.
"""

import logging
import numpy as np
from uw_reallinear.config import get_setting, resolve_tolerance
from uw_reallinear.exceptions import (
    DimensionMismatch, NonFiniteEntry, NotSelfAdjoint, SingularMatrix)


logger = logging.getLogger(__name__)
EPS = np.finfo(float).eps


def as_matrix(value, name="matrix"):
    """
    :return: a complex128 2-d copy of value
    raise NonFiniteEntry on NaN or Inf entries
    """
    m = np.array(value, dtype=complex)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.ndim != 2:
        raise DimensionMismatch(name, m.shape)
    if not np.all(np.isfinite(m)):
        raise NonFiniteEntry(name, m.shape)
    return m


def as_vector(value, n=None, name="vector"):
    v = np.array(value, dtype=complex).ravel()
    if not np.all(np.isfinite(v)):
        raise NonFiniteEntry(name, v.shape)
    if n is not None and v.shape[0] != n:
        raise DimensionMismatch(name, (v.shape[0], n))
    return v


def require_square(m, name="matrix"):
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch("{} is not square".format(name), m.shape)
    return m.shape[0]


def matmul(a, b):
    a = as_matrix(a, "matmul A")
    b = as_matrix(b, "matmul B")
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch("matmul", (a.shape, b.shape))
    return a @ b


def adjoint(a):
    return as_matrix(a, "adjoint").conj().T


def realify_columns(g):
    """
    Real 2n x m matrix whose column k is (Re g_k; Im g_k).
    """
    g = as_matrix(g, "realify")
    return np.vstack([g.real, g.imag])


def _factor(a, tol, strict):
    """
    LU factorization with partial pivoting.
    :return: (lu, perm, sign) or None when singular and not strict
    """
    lu = as_matrix(a, "factor")
    n = require_square(lu)
    perm = np.arange(n)
    sign = 1
    scale = np.linalg.norm(lu, axis=0).max() if n else 0.0
    threshold = tol.rel * scale
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        pivot = abs(lu[p, k])
        if (strict and pivot <= threshold) or pivot == 0:
            if strict:
                raise SingularMatrix("pivot {}".format(k), pivot)
            return None
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            perm[[k, p]] = perm[[p, k]]
            sign = -sign
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, perm, sign


def solve(a, b, tol=None):
    """
    Solve a x = b by Gaussian elimination with partial pivoting.
    b may be a vector or a matrix of right-hand sides.
    raise SingularMatrix when a pivot is at most tol.rel times the
    largest initial column norm of a
    """
    tol = resolve_tolerance(tol)
    a = as_matrix(a, "solve A")
    n = require_square(a, "solve A")
    vector_rhs = np.ndim(b) == 1
    rhs = as_matrix(np.reshape(b, (-1, 1)) if vector_rhs else b, "solve b")
    if rhs.shape[0] != n:
        raise DimensionMismatch("solve", (a.shape, rhs.shape))
    lu, perm, _ = _factor(a, tol, strict=True)
    x = rhs[perm].copy()
    for k in range(n):
        x[k + 1:] -= np.outer(lu[k + 1:, k], x[k])
    for k in range(n - 1, -1, -1):
        x[k] = (x[k] - lu[k, k + 1:] @ x[k + 1:]) / lu[k, k]
    return x.ravel() if vector_rhs else x


def inverse(a, tol=None):
    a = as_matrix(a, "inverse")
    return solve(a, np.eye(require_square(a), dtype=complex), tol)


def right_divide(b, a, tol=None):
    """
    b a^{-1}, computed as the transpose of solve(a^T, b^T).
    """
    return solve(as_matrix(a).T, as_matrix(b).T, tol).T


def det(a):
    """
    Determinant by pivoted elimination; singular input gives (about) 0.
    """
    a = as_matrix(a, "det")
    n = require_square(a, "det")
    if n == 0:
        return complex(1)
    factored = _factor(a, resolve_tolerance(), strict=False)
    if factored is None:
        return complex(0)
    lu, _, sign = factored
    return complex(sign * np.prod(np.diag(lu)))


def _rotation(app, aqq, apq):
    """
    2x2 unitary J with (J* H J) diagonal for H = [[app, apq],
    [conj(apq), aqq]], app and aqq real.
    """
    r = abs(apq)
    phase = apq / r
    theta = (aqq - app) / (2.0 * r)
    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.hypot(1.0, theta))
    c = 1.0 / np.hypot(1.0, t)
    s = t * c
    w = np.conj(phase)
    return np.array([[c, s], [-s * w, c * w]], dtype=complex)


def _off_norm(h):
    return np.linalg.norm(h - np.diag(np.diag(h)))


def is_self_adjoint(p, tol=None):
    tol = resolve_tolerance(tol)
    p = as_matrix(p)
    if p.shape[0] != p.shape[1]:
        return False
    return (np.linalg.norm(p - p.conj().T) <=
            tol.rel * max(np.linalg.norm(p), 1.0) + tol.abs)


def hermitian_eig(p, tol=None):
    """
    Cyclic Jacobi eigendecomposition of a Hermitian matrix.
    :return: (eigenvalues ascending, unitary V with P V = V diag(λ))
    raise NotSelfAdjoint if p is not Hermitian within tol
    """
    tol = resolve_tolerance(tol)
    p = as_matrix(p, "hermitian_eig")
    n = require_square(p, "hermitian_eig")
    if not is_self_adjoint(p, tol):
        raise NotSelfAdjoint("hermitian_eig",
                             float(np.linalg.norm(p - p.conj().T)))
    h = (p + p.conj().T) / 2.0
    v = np.eye(n, dtype=complex)
    small = EPS * np.linalg.norm(h)
    sweeps = 0
    max_sweeps = get_setting('JACOBI_SWEEPS')
    while _off_norm(h) > n * small and sweeps < max_sweeps:
        sweeps += 1
        for i in range(n - 1):
            for j in range(i + 1, n):
                if abs(h[i, j]) <= small:
                    h[i, j] = h[j, i] = 0
                    continue
                rot = _rotation(h[i, i].real, h[j, j].real, h[i, j])
                idx = [i, j]
                h[:, idx] = h[:, idx] @ rot
                h[idx, :] = rot.conj().T @ h[idx, :]
                h[i, j] = h[j, i] = 0
                h[i, i] = h[i, i].real
                h[j, j] = h[j, j].real
                v[:, idx] = v[:, idx] @ rot
    if sweeps >= max_sweeps:
        logger.warning({'op': 'hermitian_eig', 'n': n, 'sweeps': sweeps,
                        'off': float(_off_norm(h))})
    values = np.diag(h).real
    order = np.argsort(values, kind='stable')
    return values[order], v[:, order]


def singular_values(a, tol=None):
    """
    One-sided Jacobi: the Jacobi rotations that diagonalize A*A are
    applied to the columns of A, which keeps small singular values
    accurate. :return: singular values in descending order
    """
    a = as_matrix(a, "singular_values")
    if a.shape[0] < a.shape[1]:
        a = a.conj().T
    m = a.shape[1]
    if m == 0:
        return np.zeros(0)
    work = a.copy()
    max_sweeps = get_setting('JACOBI_SWEEPS')
    for _ in range(max_sweeps):
        rotated = False
        for i in range(m - 1):
            for j in range(i + 1, m):
                alpha = np.vdot(work[:, i], work[:, i]).real
                beta = np.vdot(work[:, j], work[:, j]).real
                gamma = np.vdot(work[:, i], work[:, j])
                if gamma == 0 or \
                        abs(gamma) <= m * EPS * np.sqrt(alpha * beta):
                    continue
                rotated = True
                idx = [i, j]
                work[:, idx] = work[:, idx] @ _rotation(alpha, beta, gamma)
        if not rotated:
            break
    else:
        logger.warning({'op': 'singular_values', 'shape': a.shape,
                        'sweeps': max_sweeps})
    return np.sort(np.linalg.norm(work, axis=0))[::-1]


def operator_norm(a, tol=None):
    sv = singular_values(a, tol)
    return float(sv[0]) if sv.size else 0.0


def rank_ratio_ok(sv, tol):
    """
    True iff the smallest singular value exceeds tol.rel times the largest.
    """
    return bool(sv.size > 0 and sv[-1] > tol.rel * sv[0])
