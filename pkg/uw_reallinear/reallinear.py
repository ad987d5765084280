# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Real-linear transformations of C^n in block, split, conjugate-pair and
normalized representations. Every conversion passes through the block
form and is checked against its source on the 2n standard real basis
vectors before it is returned.
"""

import logging
import numpy as np
from uw_reallinear.config import resolve_tolerance
from uw_reallinear.exceptions import (
    ConversionMismatch, DimensionMismatch, InternalConsistencyError,
    NotInSplitClass, SingularM, SingularMatrix)
from uw_reallinear.kernel import (
    EPS, as_matrix, as_vector, det, hermitian_eig, operator_norm,
    rank_ratio_ok, right_divide, singular_values, solve)
from uw_reallinear.models import (
    BLOCK, CONJUGATE_PAIR, FORM_KINDS, SPLIT, BlockForm,
    ConjugatePairForm, NormalizedForm, RealLinearMap, SplitForm)


logger = logging.getLogger(__name__)
STRICT = 'strict'
BOUNDARY = 'boundary'
VIOLATED = 'violated'


def _form(T):
    return T.form if isinstance(T, RealLinearMap) else T


def strict_status(value, limit, tol=None):
    """
    Classify value < limit with a relative margin.
    :return: 'strict' when value < limit (1 - tol.rel), 'boundary' when
    value lies within the margin, 'violated' otherwise
    """
    tol = resolve_tolerance(tol)
    if value < limit * (1.0 - tol.rel):
        return STRICT
    if value <= limit * (1.0 + tol.rel):
        return BOUNDARY
    return VIOLATED


def apply(T, z):
    """
    Evaluate the stored representation of T at the complex vector z.
    """
    form = _form(T)
    z = as_vector(z, form.dim, "z")
    if form.kind == BLOCK:
        x, y = z.real, z.imag
        return (form.E1 @ x + form.E2 @ y) + 1j * (form.E3 @ x + form.E4 @ y)
    if form.kind == SPLIT:
        x, y = z.real, z.imag
        return x + form.A @ y + 1j * (form.B @ y)
    if form.kind == CONJUGATE_PAIR:
        return form.M @ z + np.conj(form.N @ z)
    w = z + np.conj(form.E @ z)
    return w if form.G is None else form.G @ w


def _pair_to_block(M, N):
    return BlockForm((M + N).real, -(M + N).imag,
                     (M - N).imag, (M - N).real)


def to_block(T):
    form = _form(T)
    n = form.dim
    if form.kind == BLOCK:
        return form
    if form.kind == SPLIT:
        return BlockForm(np.eye(n), form.A, np.zeros((n, n)), form.B)
    if form.kind == CONJUGATE_PAIR:
        return _pair_to_block(form.M, form.N)
    G = np.eye(n, dtype=complex) if form.G is None else form.G
    return _pair_to_block(G, np.conj(G) @ form.E)


def to_conjugate_pair(T):
    form = _form(T)
    if form.kind == CONJUGATE_PAIR:
        return form
    b = to_block(form)
    return ConjugatePairForm(
        ((b.E1 + b.E4) + 1j * (b.E3 - b.E2)) / 2.0,
        ((b.E1 - b.E4) - 1j * (b.E3 + b.E2)) / 2.0)


def realify(T):
    """
    :return: the real 2n x 2n matrix [[E1, E2], [E3, E4]] acting on (x; y)
    """
    b = to_block(T)
    return np.block([[b.E1, b.E2], [b.E3, b.E4]])


def _margin(scale, tol):
    return tol.rel * max(scale, 1.0) + tol.abs


def _basis(n):
    eye = np.eye(n, dtype=complex)
    return list(eye) + list(1j * eye)


def _check_agreement(source, result, tol, op):
    n = source.dim
    scale = np.linalg.norm(realify(source))
    threshold = 8 * n * _margin(scale, tol)
    for v in _basis(n):
        diff = float(np.linalg.norm(apply(source, v) - apply(result, v)))
        if diff > threshold:
            logger.error({'op': op, 'from': source.kind, 'to': result.kind,
                          'diff': diff, 'threshold': threshold})
            raise ConversionMismatch(op, diff)


def _to_split(block, tol):
    n = block.dim
    scale = np.linalg.norm(realify(block))
    defect = float(np.linalg.norm(
        np.hstack([block.E1 - np.eye(n), block.E3])))
    if defect > _margin(scale, tol):
        raise NotInSplitClass("convert to split", defect)
    return SplitForm(block.E2, block.E4)


def _factor_pair(pair, tol, op):
    try:
        E = solve(np.conj(pair.M), pair.N, tol)
    except SingularMatrix as ex:
        raise SingularM(op, ex.code)
    return E


def convert(T, target, tol=None):
    """
    :param target: one of 'block', 'split', 'conjugate_pair', 'normalized'
    :return: a RealLinearMap in the target representation
    raise NotInSplitClass, SingularM or ConversionMismatch
    """
    tol = resolve_tolerance(tol)
    if target not in FORM_KINDS:
        raise DimensionMismatch("unknown representation", target)
    source = _form(T)
    if source.kind == target:
        return RealLinearMap(source)
    if target == BLOCK:
        result = to_block(source)
    elif target == CONJUGATE_PAIR:
        result = to_conjugate_pair(source)
    elif target == SPLIT:
        result = _to_split(to_block(source), tol)
    else:
        pair = to_conjugate_pair(source)
        result = NormalizedForm(_factor_pair(pair, tol, "convert"), pair.M)
    _check_agreement(source, result, tol, "convert")
    logger.debug({'op': 'convert', 'from': source.kind, 'to': target,
                  'n': source.dim})
    return RealLinearMap(result)


def _split_cross_check(form, tol):
    """
    B decides. realify = [[I, A], [0, B]] and eliminating the identity
    block leaves B untouched, so det realify must equal det B to rounding
    whatever the size of A.
    """
    b_ok = rank_ratio_ok(singular_values(form.B), tol)
    r_det = det(realify(form)).real
    b_det = det(form.B).real
    gap = abs(r_det - b_det)
    if gap > tol.rel * max(abs(r_det), abs(b_det)):
        logger.error({'op': 'is_invertible', 'B': b_ok,
                      'det_realify': r_det, 'det_B': b_det})
        raise InternalConsistencyError("is_invertible split criterion", gap)
    return b_ok


def is_invertible(T, tol=None):
    """
    True iff the smallest singular value of realify(T) exceeds tol.rel
    times the largest. Split forms are decided by the same test on B,
    cross-checked against the determinant of realify(T).
    """
    tol = resolve_tolerance(tol)
    form = _form(T)
    if form.kind == SPLIT:
        return _split_cross_check(form, tol)
    return rank_ratio_ok(singular_values(realify(form)), tol)


def majorization_margin(T, tol=None):
    """
    :return: operator norm of N M^{-1}, or None when M is singular
    """
    tol = resolve_tolerance(tol)
    pair = to_conjugate_pair(T)
    if not rank_ratio_ok(singular_values(pair.M), tol):
        return None
    try:
        return operator_norm(right_divide(pair.N, pair.M, tol))
    except SingularMatrix:
        return None


def majorizes(T, tol=None):
    """
    True iff M is invertible and |N z| < |M z| for all z != 0, tested as
    operator_norm(N M^{-1}) < 1 - tol.rel.
    """
    tol = resolve_tolerance(tol)
    margin = majorization_margin(T, tol)
    if margin is None:
        return False
    status = strict_status(margin, 1.0, tol)
    if status == BOUNDARY:
        logger.info({'op': 'majorizes', 'boundary': True, 'norm': margin})
    return status == STRICT


def normalize_post_composition(T, tol=None):
    """
    Factor T(z) = G (z + conj(E z)) with G = M.
    :return: (G, NormalizedForm(E))
    raise SingularM when M is not invertible
    """
    tol = resolve_tolerance(tol)
    pair = to_conjugate_pair(T)
    E = NormalizedForm(_factor_pair(pair, tol, "normalize"))
    G = pair.M.copy()
    _check_agreement(pair, NormalizedForm(E.E, G), tol, "normalize")
    return G, E


def contraction_check(E, tol=None):
    """
    True iff operator_norm(E) < 1 - tol.rel. The smallest eigenvalue of
    I - E*E is checked against the same margin and must agree.
    """
    tol = resolve_tolerance(tol)
    form = _form(E)
    e = form.E if isinstance(form, NormalizedForm) else as_matrix(E, "E")
    n = e.shape[0]
    norm = operator_norm(e, tol)
    status = strict_status(norm, 1.0, tol)
    values, _ = hermitian_eig(np.eye(n) - e.conj().T @ e, tol)
    limit = 1.0 - (1.0 - tol.rel) ** 2
    eig_ok = values[0] > limit
    norm_ok = status == STRICT
    if eig_ok != norm_ok:
        noise = 16 * n * EPS * max(1.0, norm * norm)
        if status != BOUNDARY and abs(values[0] - limit) > noise:
            logger.error({'op': 'contraction_check', 'norm': norm,
                          'min_eig': float(values[0])})
            raise InternalConsistencyError("contraction_check",
                                           float(values[0]))
        logger.info({'op': 'contraction_check', 'boundary': True,
                     'norm': norm, 'min_eig': float(values[0])})
        return False
    return norm_ok


def compose(T2, T1):
    """
    :return: T2 after T1 as a block form, from the product of their
    realifications
    """
    if _form(T2).dim != _form(T1).dim:
        raise DimensionMismatch("compose", (_form(T2).dim, _form(T1).dim))
    r = realify(T2) @ realify(T1)
    n = _form(T1).dim
    return RealLinearMap(BlockForm(r[:n, :n], r[:n, n:], r[n:, :n],
                                   r[n:, n:]))
