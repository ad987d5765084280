# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Real-linear maps on C^n and lattices in C^n: representation changes,
canonical forms modulo the unitary group, lattice equivalence and the
quotient tori. Operations log through the standard logging module;
configure handlers if you want to see them.
"""
