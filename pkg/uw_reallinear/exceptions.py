# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Exceptions raised when an operation's precondition or self-check fails.
The message names the operation, the code carries the offending value.
"""


class RealLinearException(Exception):

    def __init__(self, message, code=None):
        self.message = "{} ==> {}".format(message, code)
        self.code = code

    def __str__(self):
        return "{}: {}".format(self.message, self.__class__.__name__)


class NonFiniteEntry(RealLinearException):
    """
    Exception when a matrix or vector holds a NaN or an infinity
    """
    pass


class DimensionMismatch(RealLinearException):
    """
    Exception when operand shapes are incompatible
    """
    pass


class NotRealMatrix(RealLinearException):
    """
    Exception when a block of a real form has a nonzero imaginary part
    """
    pass


class DimensionViolation(RealLinearException):
    """
    Exception when a generator matrix has more than 2n columns
    """
    pass


class InvalidTolerance(RealLinearException):
    """
    Exception when rel <= 0 or abs < 0
    """
    pass


class SingularMatrix(RealLinearException):
    """
    Exception when a pivot falls below the singular threshold
    """
    pass


class NotSelfAdjoint(RealLinearException):
    """
    Exception when a matrix passed as Hermitian is not
    """
    pass


class NotPositiveDefinite(RealLinearException):
    """
    Exception when a Gram form has a non-positive eigenvalue
    """
    pass


class NotInSL(RealLinearException):
    """
    Exception when a matrix is required to have determinant 1
    """
    pass


class NotInSplitClass(RealLinearException):
    """
    Exception when a map does not fix R^n x {0} pointwise
    (E1 != I or E3 != 0)
    """
    pass


class SingularM(RealLinearException):
    """
    Exception when the complex-linear part M is not invertible
    """
    pass


class ConversionMismatch(RealLinearException):
    """
    Exception when a converted representation disagrees with its source
    on the standard real basis
    """
    pass


class InternalConsistencyError(RealLinearException):
    """
    Exception when two independent checks of the same property disagree
    """
    pass


class RankDeficient(RealLinearException):
    """
    Exception when generators do not span C^n over R
    """
    pass


class FirstBlockSingular(RealLinearException):
    """
    Exception when the first n generators are C-linearly dependent
    """
    pass


class NotAPeriodMatrix(RealLinearException):
    """
    Exception when the imaginary part of a period matrix is singular
    """
    pass


class NonIntegralEntry(RealLinearException):
    """
    Exception when an entry is not within tolerance of a Gaussian integer
    """
    pass


class AmbiguousIntegrality(RealLinearException):
    """
    Exception when an entry is neither clearly integral nor clearly not
    """
    pass


class DeterminantNotOne(RealLinearException):
    """
    Exception when an integral matrix has exact determinant other than 1
    """
    pass


class DimensionTooLarge(RealLinearException):
    """
    Exception when n exceeds the enumeration cap
    """
    pass


class HeightTooLarge(RealLinearException):
    """
    Exception when the height box exceeds the enumeration budget
    """
    pass


class RadiusBudgetExceeded(RealLinearException):
    """
    Exception when the short vector box exceeds the enumeration budget
    """
    pass


class LatticeMismatch(RealLinearException):
    """
    Exception when torus points live on different lattices
    """
    pass


class MajorizationFails(RealLinearException):
    """
    Exception when |alpha| > |beta| does not hold
    """
    pass


class MalformedInput(RealLinearException):
    """
    Exception when command input cannot be decoded
    """
    pass
