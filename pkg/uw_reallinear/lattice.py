# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Lattices in C^n as images of Z^{2n}: validation, covolume, same-lattice
tests with integer witnesses, membership in the Gaussian unimodular
group, and the normalization to generators [I | Z].
"""

import logging
import numpy as np
from uw_reallinear.config import resolve_tolerance
from uw_reallinear.exceptions import (
    AmbiguousIntegrality, DeterminantNotOne, DimensionMismatch,
    DimensionViolation, FirstBlockSingular, InternalConsistencyError,
    NonIntegralEntry, NotAPeriodMatrix, RankDeficient, SingularMatrix)
from uw_reallinear.gaussian import (
    ONE, ZERO, GaussianInteger, adjugate, exact_matmul, gaussian_determinant,
    identity, integer_determinant)
from uw_reallinear.kernel import (
    as_matrix, rank_ratio_ok, realify_columns, singular_values, solve)
from uw_reallinear.models import (
    GaussianUnimodular, LatticeBasis, PeriodMatrix, SplitForm)


logger = logging.getLogger(__name__)
AMBIGUITY_FACTOR = 10


def from_generators(G, tol=None):
    """
    raise RankDeficient unless the 2n columns of G span C^n over R
    """
    tol = resolve_tolerance(tol)
    g = as_matrix(G, "generators")
    if g.shape[1] != 2 * g.shape[0]:
        raise DimensionMismatch("generators must be n x 2n", g.shape)
    sv = singular_values(realify_columns(g))
    if not rank_ratio_ok(sv, tol):
        raise RankDeficient("from_generators", float(sv[-1]))
    return LatticeBasis(g)


def standard_lattice(n):
    """
    (Z[i])^n, generated by e_1..e_n, i e_1..i e_n
    """
    eye = np.eye(n, dtype=complex)
    return LatticeBasis(np.hstack([eye, 1j * eye]))


def lattice_from_matrix(A, tol=None):
    """
    The lattice A((Z[i])^n), generated by [A | iA].
    """
    a = as_matrix(A, "lattice matrix")
    return from_generators(np.hstack([a, 1j * a]), tol)


def rank_margin(G):
    """
    Smallest singular value of the real 2n x m realification of G;
    positive exactly when the columns are R-linearly independent.
    """
    g = as_matrix(G, "generators")
    n, m = g.shape
    if m > 2 * n:
        raise DimensionViolation("rank_margin", (n, m))
    sv = singular_values(realify_columns(g))
    return float(sv[-1]) if m else 0.0


def covolume(L):
    """
    |det| of the realified generator matrix
    """
    r = realify_columns(L.G)
    return float(abs(np.linalg.det(r)))


def _integrality_threshold(x, tol):
    return tol.abs + tol.rel * max(1.0, float(np.abs(x).max()))


def _round_integral(x, tol, op):
    """
    Round a real matrix to integers.
    :return: (nested lists of int, max distance) or None when some entry
    is clearly not integral
    raise AmbiguousIntegrality for an entry between one and ten
    thresholds away from an integer
    """
    threshold = _integrality_threshold(x, tol)
    rounded = np.round(x)
    dist = np.abs(x - rounded)
    worst = float(dist.max()) if dist.size else 0.0
    if worst <= threshold:
        return [[int(v) for v in row] for row in rounded], worst
    if worst < AMBIGUITY_FACTOR * threshold:
        logger.warning({'op': op, 'distance': worst, 'threshold': threshold})
        raise AmbiguousIntegrality(op, worst)
    return None


def same_lattice(L1, L2, tol=None):
    """
    L1 = L2 iff X = R1^{-1} R2 is an integer matrix with det +-1, R the
    realified generators. An entry counts as integral within
    tol.abs + tol.rel max(1, max|X|); entries up to ten times that away
    raise AmbiguousIntegrality.
    :return: (bool, X as nested lists of int or None)
    """
    tol = resolve_tolerance(tol)
    if L1.n != L2.n:
        raise DimensionMismatch("same_lattice", (L1.n, L2.n))
    x = solve(realify_columns(L1.G), realify_columns(L2.G), tol).real
    result = _round_integral(x, tol, "same_lattice")
    if result is None:
        return False, None
    witness, _ = result
    d = integer_determinant(witness)
    logger.debug({'op': 'same_lattice', 'n': L1.n, 'det': d})
    if abs(d) != 1:
        return False, None
    return True, witness


def _round_gaussian(b, tol, op):
    threshold = tol.abs + tol.rel * max(1.0, float(np.abs(b).max()))
    entries = []
    for row in b:
        out = []
        for z in row:
            g, dist = GaussianInteger.nearest(z)
            if dist > threshold:
                if dist < AMBIGUITY_FACTOR * threshold:
                    raise AmbiguousIntegrality(op, dist)
                raise NonIntegralEntry(op, [z.real, z.imag])
            out.append(g)
        entries.append(out)
    return entries


def sigma_membership(B, tol=None):
    """
    :return: GaussianUnimodular when B rounds to a Gaussian integer matrix
    with exact determinant 1
    raise NonIntegralEntry, DeterminantNotOne
    """
    tol = resolve_tolerance(tol)
    b = as_matrix(B, "sigma_membership")
    if b.shape[0] != b.shape[1]:
        raise DimensionMismatch("sigma_membership", b.shape)
    entries = _round_gaussian(b, tol, "sigma_membership")
    d = gaussian_determinant(entries)
    if d != ONE:
        raise DeterminantNotOne("sigma_membership", str(d))
    n = len(entries)
    # the inverse of a determinant-one integral matrix is integral
    if exact_matmul(entries, adjugate(entries, ONE), ZERO) != \
            identity(n, ONE, ZERO):
        raise InternalConsistencyError("sigma_membership adjugate", str(d))
    return GaussianUnimodular(entries)


def permute_to_L1(L, tol=None):
    """
    Move n C-linearly independent generators to the front, choosing
    greedily the column with the largest residual after projecting out
    the columns already chosen (ties go to the lowest index).
    :return: (LatticeBasis, perm) with column k of the result being
    column perm[k] of L
    """
    tol = resolve_tolerance(tol)
    g = L.G
    n = L.n
    work = g.copy()
    chosen = []
    for _ in range(n):
        norms = np.linalg.norm(work, axis=0)
        norms[chosen] = -1.0
        k = int(np.argmax(norms))
        chosen.append(k)
        q = work[:, k] / norms[k]
        work = work - np.outer(q, q.conj() @ work)
    perm = chosen + [k for k in range(2 * n) if k not in chosen]
    block_sv = singular_values(g[:, chosen])
    if not rank_ratio_ok(block_sv, tol):
        raise InternalConsistencyError("permute_to_L1",
                                       float(block_sv[-1]))
    logger.debug({'op': 'permute_to_L1', 'n': n, 'perm': perm})
    return LatticeBasis(g[:, perm]), perm


def normalize_to_Lstarstar(L, tol=None):
    """
    With F the first n generators and S the last n, A = F^{-1} takes the
    generators to [I | Z], Z = A S.
    :return: (A, PeriodMatrix Z)
    raise FirstBlockSingular when F is not invertible
    """
    tol = resolve_tolerance(tol)
    n = L.n
    first, second = L.G[:, :n], L.G[:, n:]
    if not rank_ratio_ok(singular_values(first), tol):
        raise FirstBlockSingular("normalize_to_Lstarstar",
                                 float(singular_values(first)[-1]))
    try:
        a = solve(first, np.eye(n, dtype=complex), tol)
        z = solve(first, second, tol)
    except SingularMatrix as ex:
        raise FirstBlockSingular("normalize_to_Lstarstar", ex.code)
    sv = singular_values(z.imag)
    if not rank_ratio_ok(sv, tol):
        raise NotAPeriodMatrix("normalize_to_Lstarstar", float(sv[-1]))
    return a, PeriodMatrix(z, tol)


def to_split_form(Z):
    """
    Z = A + iB as the split map x + A y + i B y
    """
    return SplitForm(Z.Z.real, Z.Z.imag)
