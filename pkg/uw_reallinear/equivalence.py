# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Equivalence of lattices A(Z[i]^n) under unitary (or special unitary)
maps. Two lattices are equivalent iff gram(A2) = B* gram(A1) B for some
Gaussian unimodular B; the search for B is bounded by a height H, so an
exhausted search is reported as undecided rather than inequivalent.
Covolume and short vector counts refute cheaply before any search.
"""

import itertools
import logging
import numpy as np
from uw_reallinear.config import get_setting, resolve_tolerance
from uw_reallinear.exceptions import (
    DimensionMismatch, DimensionTooLarge, HeightTooLarge, NotInSL,
    RadiusBudgetExceeded)
from uw_reallinear.gaussian import ONE, GaussianInteger, gaussian_determinant
from uw_reallinear.kernel import (
    as_matrix, det, realify_columns, require_square, right_divide,
    singular_values)
from uw_reallinear.models import (
    EQUIVALENT, REFUTED, SPECIAL_UNITARY, UNDECIDED, UNITARY,
    EquivalenceVerdict, GaussianUnimodular, GramForm, ShortVectorSpectrum)
from uw_reallinear.polar import classify, gram


logger = logging.getLogger(__name__)
COVOLUME = 'covolume'
SHORT_VECTORS = 'short_vectors'
MODES = (UNITARY, SPECIAL_UNITARY)


def _gram_matrix(P, name):
    p = P.P if isinstance(P, GramForm) else as_matrix(P, name)
    require_square(p, name)
    return p


def _gaussian_grid(n, height):
    """
    Integer coordinates (Re v1, Im v1, ..., Re vn, Im vn) of every
    Gaussian vector of height <= height, in lexicographic order.
    """
    values = range(-height, height + 1)
    return np.array(list(itertools.product(values, repeat=2 * n)),
                    dtype=np.int64).reshape(-1, 2 * n)


def _check_bounds(n, height, budget):
    if n > get_setting('MAX_DIM'):
        raise DimensionTooLarge("sigma_orbit_equal", n)
    estimate = (2 * height + 1) ** (2 * n) * n
    if estimate > budget:
        raise HeightTooLarge("sigma_orbit_equal", estimate)


def _orbit_witnesses(p1, p2, height, tol):
    """
    Yield every Gaussian unimodular B of height <= height with
    B* P1 B = P2 within tolerance. Column j of B runs over the Gaussian
    vectors v with v* P1 v = (P2)_jj, nearest to e_j first (L1 distance
    of the coordinates, ties in lexicographic order); partial columns are
    pruned on the off-diagonal entries.
    """
    n = p1.shape[0]
    grid = _gaussian_grid(n, height)
    vectors = grid[:, 0::2] + 1j * grid[:, 1::2]
    values = np.einsum('ki,ij,kj->k', vectors.conj(), p1, vectors).real
    threshold = (tol.rel * max(np.linalg.norm(p1), np.linalg.norm(p2)) +
                 tol.abs)
    candidates = []
    for j in range(n):
        target = np.zeros(2 * n, dtype=np.int64)
        target[2 * j] = 1
        distance = np.abs(grid - target).sum(axis=1)
        idx = np.nonzero(np.abs(values - p2[j, j].real) <= threshold)[0]
        candidates.append(idx[np.argsort(distance[idx], kind='stable')])
    logger.debug({'op': 'sigma_orbit_equal', 'n': n, 'height': height,
                  'columns': [len(c) for c in candidates]})

    def search(chosen):
        j = len(chosen)
        if j == n:
            entries = [[GaussianInteger(int(grid[chosen[c], 2 * r]),
                                        int(grid[chosen[c], 2 * r + 1]))
                        for c in range(n)] for r in range(n)]
            if gaussian_determinant(entries) == ONE:
                yield entries
            return
        idx = candidates[j]
        if j and idx.size:
            cross = vectors[chosen].conj() @ p1 @ vectors[idx].T
            keep = np.all(np.abs(cross - p2[:j, j][:, None]) <= threshold,
                          axis=0)
            idx = idx[keep]
        for k in idx:
            yield from search(chosen + [int(k)])

    yield from search([])


def sigma_orbit_equal(P1, P2, height=None, tol=None, budget=None):
    """
    Search for B in the Gaussian unimodular group with B* P1 B = P2.
    :return: EquivalenceVerdict, Equivalent with the first B found or
    UndecidedUpToBound
    raise DimensionTooLarge, HeightTooLarge
    """
    tol = resolve_tolerance(tol)
    height = get_setting('HEIGHT') if height is None else int(height)
    budget = get_setting('ENUM_BUDGET') if budget is None else int(budget)
    p1 = _gram_matrix(P1, "P1")
    p2 = _gram_matrix(P2, "P2")
    if p1.shape != p2.shape:
        raise DimensionMismatch("sigma_orbit_equal", (p1.shape, p2.shape))
    _check_bounds(p1.shape[0], height, budget)
    for entries in _orbit_witnesses(p1, p2, height, tol):
        return EquivalenceVerdict(EQUIVALENT, height,
                                  witness_b=GaussianUnimodular(entries))
    return EquivalenceVerdict(UNDECIDED, height)


def short_vectors(A, radius=None, tol=None, budget=None):
    """
    Squared norms |A l|^2 <= radius over nonzero l in Z[i]^n. The
    coefficient box is bounded by sqrt(radius) / sigma_min of the
    realified generators [A | iA].
    raise RadiusBudgetExceeded when the box exceeds the budget
    """
    tol = resolve_tolerance(tol)
    radius = get_setting('RADIUS') if radius is None else float(radius)
    budget = get_setting('ENUM_BUDGET') if budget is None else int(budget)
    a = as_matrix(A, "short_vectors")
    n = require_square(a, "short_vectors")
    r = realify_columns(np.hstack([a, 1j * a]))
    sigma_min = float(singular_values(r)[-1])
    limit = radius * (1.0 + tol.rel)
    if sigma_min <= 0:
        raise RadiusBudgetExceeded("short_vectors", float('inf'))
    k = int(np.floor(np.sqrt(max(limit, 0.0)) / sigma_min))
    box = (2 * k + 1) ** (2 * n)
    if box > budget:
        raise RadiusBudgetExceeded("short_vectors", box)
    rest = np.array(list(itertools.product(range(-k, k + 1),
                                           repeat=2 * n - 1)),
                    dtype=float).reshape(-1, 2 * n - 1)
    norms = []
    for first in range(-k, k + 1):
        coords = np.hstack([np.full((rest.shape[0], 1), float(first)),
                            rest])
        lengths = np.sum((coords @ r.T) ** 2, axis=1)
        nonzero = np.any(coords != 0, axis=1)
        norms.extend(lengths[nonzero & (lengths <= limit)].tolist())
    logger.debug({'op': 'short_vectors', 'n': n, 'box': box,
                  'count': len(norms)})
    return ShortVectorSpectrum(radius, norms)


def _spectrum_difference(s1, s2, tol):
    """
    :return: the two differing values, or None when the spectra agree
    away from the radius boundary
    """
    cut = s1.radius * (1.0 - 8 * tol.rel)
    n1 = [x for x in s1.norms if x <= cut]
    n2 = [x for x in s2.norms if x <= cut]
    if len(n1) != len(n2):
        return [len(n1), len(n2)]
    for x, y in zip(n1, n2):
        if abs(x - y) > 8 * tol.rel * max(1.0, x, y):
            return [x, y]
    return None


def _refute(a1, a2, radius, tol, budget):
    c1 = abs(det(a1)) ** 2
    c2 = abs(det(a2)) ** 2
    if abs(c1 - c2) > tol.rel * max(c1, c2):
        return COVOLUME, [c1, c2]
    try:
        difference = _spectrum_difference(
            short_vectors(a1, radius, tol, budget),
            short_vectors(a2, radius, tol, budget), tol)
    except RadiusBudgetExceeded as ex:
        logger.info({'op': 'lattice_equivalent', 'skipped': SHORT_VECTORS,
                     'box': ex.code})
        return None
    if difference is not None:
        return SHORT_VECTORS, difference
    return None


def _unitary_witness(a1, a2, unimodular, mode, tol):
    inverse_b = unimodular.inverse().matrix()
    t = right_divide(a2 @ inverse_b, a1, tol)
    membership = classify(t, tol)
    if not membership.in_U:
        logger.info({'op': 'lattice_equivalent', 'rejected': 'unitarity',
                     'defect': membership.unitarity_defect})
        return None
    if mode == SPECIAL_UNITARY and not membership.in_SU:
        logger.info({'op': 'lattice_equivalent', 'rejected': 'det',
                     'defect': membership.det_defect})
        return None
    return t


def lattice_equivalent(A1, A2, mode=UNITARY, height=None, tol=None,
                       radius=None, budget=None):
    """
    Is T(A1(Z[i]^n)) = A2(Z[i]^n) for some unitary T (det T = 1 in
    special_unitary mode)?
    :return: EquivalenceVerdict
    raise SingularMatrix, NotInSL
    """
    tol = resolve_tolerance(tol)
    height = get_setting('HEIGHT') if height is None else int(height)
    budget = get_setting('ENUM_BUDGET') if budget is None else int(budget)
    if mode not in MODES:
        raise DimensionMismatch("unknown mode", mode)
    a1 = as_matrix(A1, "A1")
    a2 = as_matrix(A2, "A2")
    if a1.shape != a2.shape:
        raise DimensionMismatch("lattice_equivalent", (a1.shape, a2.shape))
    p1 = gram(a1, tol)
    p2 = gram(a2, tol)
    if mode == SPECIAL_UNITARY:
        for name, a in (("A1", a1), ("A2", a2)):
            membership = classify(a, tol)
            if not membership.in_SL:
                raise NotInSL("lattice_equivalent " + name,
                              membership.det_defect)

    refuted = _refute(a1, a2, radius, tol, budget)
    if refuted is not None:
        refuter, values = refuted
        logger.debug({'op': 'lattice_equivalent', 'refuter': refuter,
                      'values': values})
        return EquivalenceVerdict(REFUTED, height, mode=mode,
                                  refuter=refuter, values=values)

    _check_bounds(a1.shape[0], height, budget)
    for entries in _orbit_witnesses(p1.P, p2.P, height, tol):
        unimodular = GaussianUnimodular(entries)
        t = _unitary_witness(a1, a2, unimodular, mode, tol)
        if t is not None:
            return EquivalenceVerdict(EQUIVALENT, height, mode=mode,
                                      witness_b=unimodular, witness_t=t)
    return EquivalenceVerdict(UNDECIDED, height, mode=mode)


def verify_witness(A1, A2, verdict, tol=None):
    """
    Independently re-check an Equivalent verdict: B exactly unimodular,
    T unitary (det 1 in special_unitary mode) and A2 = T A1 B.
    """
    tol = resolve_tolerance(tol)
    if not verdict.is_equivalent() or verdict.witness_t is None:
        return False
    a1 = as_matrix(A1, "A1")
    a2 = as_matrix(A2, "A2")
    unimodular = verdict.witness_b
    if gaussian_determinant(unimodular.entries) != ONE:
        return False
    t = verdict.witness_t
    membership = classify(t, tol)
    if not membership.in_U:
        return False
    if verdict.mode == SPECIAL_UNITARY and not membership.in_SU:
        return False
    residual = np.linalg.norm(a2 - t @ a1 @ unimodular.matrix())
    return bool(residual <= 10 * tol.rel * np.linalg.norm(a2) + tol.abs)
