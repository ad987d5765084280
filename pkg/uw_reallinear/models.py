# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

import json
import numpy as np
from restclients_core import models
from uw_reallinear.codec import (
    complex_to_json, lattice_to_json, matrix_to_json, real_matrix_to_json,
    vector_to_json)
from uw_reallinear.config import Tolerance, resolve_tolerance
from uw_reallinear.exceptions import (
    DeterminantNotOne, DimensionMismatch, InternalConsistencyError,
    NotAPeriodMatrix, NotRealMatrix)
from uw_reallinear.gaussian import (
    GaussianInteger, ONE, adjugate, gaussian_determinant)
from uw_reallinear.kernel import (
    as_matrix, as_vector, rank_ratio_ok, singular_values)


BLOCK = 'block'
SPLIT = 'split'
CONJUGATE_PAIR = 'conjugate_pair'
NORMALIZED = 'normalized'
FORM_KINDS = (BLOCK, SPLIT, CONJUGATE_PAIR, NORMALIZED)

EQUIVALENT = 'Equivalent'
REFUTED = 'RefutedByInvariant'
UNDECIDED = 'UndecidedUpToBound'

UNITARY = 'unitary'
SPECIAL_UNITARY = 'special_unitary'


def _frozen(array):
    array.flags.writeable = False
    return array


def _square(value, name, n=None):
    m = as_matrix(value, name)
    if m.shape[0] != m.shape[1] or (n is not None and m.shape[0] != n):
        raise DimensionMismatch(name, m.shape)
    return m


def _real_square(value, name, n=None):
    m = _square(value, name, n)
    if np.any(m.imag != 0):
        raise NotRealMatrix(name, float(np.abs(m.imag).max()))
    return _frozen(m.real.copy())


class BlockForm(models.Model):
    """
    T(x + iy) = E1 x + E2 y + i (E3 x + E4 y), E1..E4 real n x n.
    """
    kind = BLOCK

    def to_json(self):
        return {'kind': self.kind,
                'E1': real_matrix_to_json(self.E1),
                'E2': real_matrix_to_json(self.E2),
                'E3': real_matrix_to_json(self.E3),
                'E4': real_matrix_to_json(self.E4)}

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, E1, E2, E3, E4):
        super(BlockForm, self).__init__()
        self.E1 = _real_square(E1, "E1")
        n = self.E1.shape[0]
        self.E2 = _real_square(E2, "E2", n)
        self.E3 = _real_square(E3, "E3", n)
        self.E4 = _real_square(E4, "E4", n)
        self.dim = n


class SplitForm(models.Model):
    """
    T(x + iy) = x + A y + i B y, A and B real n x n.
    """
    kind = SPLIT

    def to_json(self):
        return {'kind': self.kind,
                'A': real_matrix_to_json(self.A),
                'B': real_matrix_to_json(self.B)}

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, A, B):
        super(SplitForm, self).__init__()
        self.A = _real_square(A, "A")
        self.B = _real_square(B, "B", self.A.shape[0])
        self.dim = self.A.shape[0]


class ConjugatePairForm(models.Model):
    """
    T(z) = M z + conj(N z).
    """
    kind = CONJUGATE_PAIR

    def to_json(self):
        return {'kind': self.kind,
                'M': matrix_to_json(self.M),
                'N': matrix_to_json(self.N)}

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, M, N):
        super(ConjugatePairForm, self).__init__()
        self.M = _frozen(_square(M, "M"))
        self.N = _frozen(_square(N, "N", self.M.shape[0]))
        self.dim = self.M.shape[0]


class NormalizedForm(models.Model):
    """
    T(z) = G (z + conj(E z)); G is the identity unless a complex-linear
    post-factor is carried along.
    """
    kind = NORMALIZED

    def is_pure(self):
        return self.G is None

    def to_json(self):
        data = {'kind': self.kind, 'E': matrix_to_json(self.E)}
        if self.G is not None:
            data['G'] = matrix_to_json(self.G)
        return data

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, E, G=None):
        super(NormalizedForm, self).__init__()
        self.E = _frozen(_square(E, "E"))
        self.dim = self.E.shape[0]
        self.G = None if G is None else _frozen(_square(G, "G", self.dim))


FORM_TYPES = {BLOCK: BlockForm, SPLIT: SplitForm,
              CONJUGATE_PAIR: ConjugatePairForm, NORMALIZED: NormalizedForm}


class RealLinearMap(models.Model):
    dim = models.PositiveIntegerField()
    kind = models.CharField(max_length=16, choices=[
        (k, k) for k in FORM_KINDS])

    def to_json(self):
        return {'dim': self.dim, 'form': self.form.to_json()}

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, form):
        if form.kind not in FORM_KINDS:
            raise DimensionMismatch("unknown representation", form.kind)
        super(RealLinearMap, self).__init__(dim=form.dim, kind=form.kind)
        self.form = form


class GramForm(models.Model):
    """
    Self-adjoint positive-definite P; the canonical representative of
    a coset U A.
    """
    def to_json(self):
        return {'P': matrix_to_json(self.P)}

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, P):
        super(GramForm, self).__init__()
        self.P = _frozen(_square(P, "P"))
        self.dim = self.P.shape[0]


class GroupMembership(models.Model):
    in_GL = models.BooleanField(default=False)
    in_SL = models.BooleanField(default=False)
    in_U = models.BooleanField(default=False)
    in_SU = models.BooleanField(default=False)
    abs_det = models.FloatField()
    unitarity_defect = models.FloatField()
    det_defect = models.FloatField()

    def to_json(self):
        return {'in_GL': self.in_GL,
                'in_SL': self.in_SL,
                'in_U': self.in_U,
                'in_SU': self.in_SU,
                'witness': {'abs_det': self.abs_det,
                            'unitarity_defect': self.unitarity_defect,
                            'det_defect': self.det_defect}}

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, *args, **kwargs):
        super(GroupMembership, self).__init__(*args, **kwargs)
        if ((self.in_SU and not (self.in_U and self.in_SL)) or
                (self.in_SL and not self.in_GL) or
                (self.in_U and not self.in_GL)):
            raise InternalConsistencyError("GroupMembership", self.to_json())


class LatticeBasis(models.Model):
    """
    Column k of G is the image of the k-th standard basis vector of
    R^{2n}.
    """
    n = models.PositiveIntegerField()

    def to_json(self):
        return lattice_to_json(self.n, self.G)

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, G):
        g = as_matrix(G, "generators")
        if g.shape[1] != 2 * g.shape[0]:
            raise DimensionMismatch("generators must be n x 2n", g.shape)
        super(LatticeBasis, self).__init__(n=g.shape[0])
        self.G = _frozen(g)


class PeriodMatrix(models.Model):
    """
    Z = A + iB; the lattice is generated by e_1..e_n and the columns of Z.
    """
    def to_json(self):
        return {'Z': matrix_to_json(self.Z)}

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, Z, tol=None):
        super(PeriodMatrix, self).__init__()
        self.Z = _frozen(_square(Z, "Z"))
        self.dim = self.Z.shape[0]
        sv = singular_values(self.Z.imag)
        if not rank_ratio_ok(sv, resolve_tolerance(tol)):
            raise NotAPeriodMatrix("Im Z singular",
                                   float(sv[-1]) if sv.size else 0.0)


class GaussianUnimodular(models.Model):
    """
    Exact n x n matrix over Z[i] with determinant 1.
    """
    def matrix(self):
        return np.array([[complex(x) for x in row] for row in self.entries],
                        dtype=complex)

    @property
    def height(self):
        return max(max(abs(x.re), abs(x.im))
                   for row in self.entries for x in row)

    def inverse(self):
        # det = 1, so the adjugate is the inverse
        return GaussianUnimodular(adjugate(self.entries, ONE))

    def to_json(self):
        return {'B': [[x.to_json() for x in row] for row in self.entries]}

    def __eq__(self, other):
        return self.entries == other.entries

    def __hash__(self):
        return super().__hash__()

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, entries):
        super(GaussianUnimodular, self).__init__()
        self.entries = tuple(tuple(GaussianInteger.coerce(x) for x in row)
                             for row in entries)
        self.dim = len(self.entries)
        if any(len(row) != self.dim for row in self.entries):
            raise DimensionMismatch("GaussianUnimodular",
                                    [len(row) for row in self.entries])
        d = gaussian_determinant(self.entries)
        if d != ONE:
            raise DeterminantNotOne("GaussianUnimodular", str(d))


class EquivalenceVerdict(models.Model):
    status = models.CharField(max_length=24, choices=(
        (EQUIVALENT, EQUIVALENT), (REFUTED, REFUTED),
        (UNDECIDED, UNDECIDED)))
    refuter = models.CharField(max_length=24, default=None)
    bound = models.PositiveIntegerField()
    mode = models.CharField(max_length=16, default=UNITARY)

    def is_equivalent(self):
        return self.status == EQUIVALENT

    def is_refuted(self):
        return self.status == REFUTED

    def to_json(self):
        data = {'verdict': self.status, 'bound': self.bound,
                'mode': self.mode}
        if self.witness_b is not None:
            data['witness'] = {
                'B': self.witness_b.to_json()['B'],
                'T': (None if self.witness_t is None
                      else matrix_to_json(self.witness_t))}
        if self.refuter is not None:
            data['refuter'] = self.refuter
            data['values'] = list(self.values)
        return data

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, status, bound, mode=UNITARY, witness_b=None,
                 witness_t=None, refuter=None, values=None):
        super(EquivalenceVerdict, self).__init__(
            status=status, bound=bound, mode=mode, refuter=refuter)
        self.witness_b = witness_b
        self.witness_t = (None if witness_t is None
                          else _frozen(as_matrix(witness_t, "T")))
        self.values = values
        if ((status == EQUIVALENT and witness_b is None) or
                (status == REFUTED and refuter is None)):
            raise InternalConsistencyError("EquivalenceVerdict", status)


class ShortVectorSpectrum(models.Model):
    radius = models.FloatField()

    def to_json(self):
        return {'radius': self.radius, 'norms': list(self.norms)}

    def __str__(self):
        return json.dumps(self.to_json())

    def __len__(self):
        return len(self.norms)

    def __init__(self, radius, norms):
        super(ShortVectorSpectrum, self).__init__(radius=float(radius))
        self.norms = tuple(sorted(float(x) for x in norms))


class TorusPoint(models.Model):
    """
    A coset z + L, held as rep = G coords with coords in [0, 1).
    """
    def to_json(self):
        return {'rep': vector_to_json(self.rep),
                'coords': [float(c) for c in self.coords]}

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, lattice, rep, coords):
        super(TorusPoint, self).__init__()
        self.lattice = lattice
        self.rep = _frozen(as_vector(rep, lattice.n, "rep"))
        self.coords = tuple(float(c) for c in coords)
        if len(self.coords) != 2 * lattice.n or \
                not all(0.0 <= c < 1.0 for c in self.coords):
            raise DimensionMismatch("coords must lie in [0, 1)^{2n}",
                                    self.coords)


class ScalarForms(models.Model):
    """
    The n = 1 forms of one map: a x + i b y, a (x + i c y),
    alpha z + beta conj(z) and theta (z + mu conj(z)). c and
    theta/mu are None where the form does not exist.
    """
    def has_ac(self):
        return self.c is not None

    def has_thetamu(self):
        return self.theta is not None

    def to_json(self):
        def opt(z):
            return None if z is None else complex_to_json(z)
        return {'a': complex_to_json(self.a), 'b': complex_to_json(self.b),
                'alpha': complex_to_json(self.alpha),
                'beta': complex_to_json(self.beta),
                'c': opt(self.c), 'theta': opt(self.theta),
                'mu': opt(self.mu)}

    def __str__(self):
        return json.dumps(self.to_json())

    def __init__(self, a, b, alpha, beta, c=None, theta=None, mu=None):
        super(ScalarForms, self).__init__()
        self.a = complex(a)
        self.b = complex(b)
        self.alpha = complex(alpha)
        self.beta = complex(beta)
        self.c = None if c is None else complex(c)
        self.theta = None if theta is None else complex(theta)
        self.mu = None if mu is None else complex(mu)


__all__ = ['Tolerance', 'BlockForm', 'SplitForm', 'ConjugatePairForm',
           'NormalizedForm', 'RealLinearMap', 'GramForm', 'GroupMembership',
           'LatticeBasis', 'PeriodMatrix', 'GaussianUnimodular',
           'EquivalenceVerdict', 'ShortVectorSpectrum', 'TorusPoint',
           'ScalarForms']
