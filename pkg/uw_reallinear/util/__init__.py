# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Random instances and settings overrides shared by the tests.
"""

import numpy as np
from commonconf import override_settings
from uw_reallinear.gaussian import ONE, UNITS, ZERO, identity


small_budget_override = override_settings(REALLINEAR_ENUM_BUDGET=1000)
single_dim_override = override_settings(REALLINEAR_MAX_DIM=1)


def seeded(seed=0):
    return np.random.default_rng(seed)


def random_complex_matrix(rng, n, m=None):
    m = n if m is None else m
    return rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))


def random_real_matrix(rng, n, m=None):
    return rng.standard_normal((n, n if m is None else m))


def random_invertible(rng, n, scale=0.2):
    """
    I + X with ||X|| well below 1, so the smallest singular value is
    bounded away from 0
    """
    return np.eye(n) + scale * random_complex_matrix(rng, n) / np.sqrt(n)


def random_unitary(rng, n):
    q, r = np.linalg.qr(random_complex_matrix(rng, n))
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_special_unitary(rng, n):
    u = random_unitary(rng, n)
    d = np.linalg.det(u)
    return u / (d ** (1.0 / n))


def random_hermitian(rng, n):
    x = random_complex_matrix(rng, n)
    return (x + x.conj().T) / 2.0


def random_gaussian_unimodular(rng, n, height=2, steps=None):
    """
    Product of elementary column operations col_j += u col_i, u a unit
    of Z[i], skipping any step that would exceed the height.
    :return: nested lists of GaussianInteger with determinant 1
    """
    entries = identity(n, ONE, ZERO)
    steps = 3 * n if steps is None else steps
    for _ in range(steps if n > 1 else 0):
        i, j = rng.choice(n, size=2, replace=False)
        unit = UNITS[int(rng.integers(len(UNITS)))]
        column = [row[j] + unit * row[i] for row in entries]
        if all(max(abs(x.re), abs(x.im)) <= height for x in column):
            for row, value in zip(entries, column):
                row[j] = value
    return entries


def to_complex(entries):
    return np.array([[complex(x) for x in row] for row in entries])


def random_generators(rng, n):
    """
    n x 2n generators of a lattice, generically of full real rank
    """
    z = 1j * np.eye(n) + 0.2 * random_complex_matrix(rng, n) / np.sqrt(n)
    return random_invertible(rng, n) @ np.hstack([np.eye(n), z])
