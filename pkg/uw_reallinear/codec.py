# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
JSON codec for complex scalars, matrices and lattices.
Complex numbers travel as [re, im] arrays, matrices as row-major nested
arrays of them. Output is deterministic: keys are sorted and floats are
written with 17 significant digits.
"""

import json
import math
import numbers
import numpy as np
from uw_reallinear.exceptions import MalformedInput


def _real(value):
    # -0.0 and 0.0 serialize identically
    return float(value) + 0.0


def complex_to_json(z):
    z = complex(z)
    return [_real(z.real), _real(z.imag)]


def vector_to_json(v):
    return [complex_to_json(z) for z in np.asarray(v).ravel()]


def matrix_to_json(m):
    return [[complex_to_json(z) for z in row] for row in np.atleast_2d(m)]


def real_matrix_to_json(m):
    return [[_real(x) for x in row] for row in np.atleast_2d(m)]


def lattice_to_json(n, generators):
    """
    Row k is the image of the k-th standard basis vector of R^{2n},
    i.e. column k of the n x 2n generator matrix.
    """
    return {'n': int(n),
            'generators': [vector_to_json(col) for col in
                           np.asarray(generators).T]}


def _is_number(value):
    return (isinstance(value, numbers.Real) and
            not isinstance(value, bool))


def _finite(value, where):
    """
    JSON integers are exact but must still fit a double.
    """
    try:
        result = float(value)
    except OverflowError:
        raise MalformedInput("{} is out of range".format(where),
                             "{} digits".format(len(str(abs(value)))))
    if not math.isfinite(result):
        raise MalformedInput("{} is not finite".format(where), result)
    return result


def parse_complex(obj, where="value"):
    if (not isinstance(obj, list) or len(obj) != 2 or
            not all(_is_number(x) for x in obj)):
        raise MalformedInput(
            "{} is not a [re, im] pair".format(where), json.dumps(obj))
    return complex(_finite(obj[0], where), _finite(obj[1], where))


def parse_vector(obj, where="vector"):
    if not isinstance(obj, list) or len(obj) == 0:
        raise MalformedInput("{} is not a non-empty array".format(where),
                             json.dumps(obj))
    return np.array([parse_complex(x, where) for x in obj], dtype=complex)


def parse_matrix(obj, where="matrix"):
    if not isinstance(obj, list) or len(obj) == 0:
        raise MalformedInput("{} is not a non-empty array".format(where),
                             json.dumps(obj))
    rows = [parse_vector(row, where) for row in obj]
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise MalformedInput("{} is ragged".format(where), sorted(widths))
    return np.array(rows, dtype=complex)


def parse_real_matrix(obj, where="matrix"):
    if not isinstance(obj, list) or len(obj) == 0 or \
            not all(isinstance(row, list) and row for row in obj):
        raise MalformedInput("{} is not a nested array".format(where),
                             json.dumps(obj))
    if len({len(row) for row in obj}) != 1:
        raise MalformedInput("{} is ragged".format(where), None)
    for row in obj:
        if not all(_is_number(x) for x in row):
            raise MalformedInput(
                "{} holds a non-numeric entry".format(where), row)
    return np.array([[_finite(x, where) for x in row] for row in obj],
                    dtype=float)


def parse_lattice(obj, where="lattice"):
    """
    Returns (n, G) with G the n x 2n generator matrix.
    """
    if not isinstance(obj, dict) or 'n' not in obj or \
            'generators' not in obj:
        raise MalformedInput(
            "{} needs 'n' and 'generators'".format(where), None)
    n = obj['n']
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MalformedInput("{} has a bad 'n'".format(where), n)
    rows = parse_matrix(obj['generators'], where)
    if rows.shape != (2 * n, n):
        raise MalformedInput(
            "{} needs 2n rows of n entries".format(where),
            "{}x{}".format(*rows.shape))
    return n, rows.T.copy()


def loads(text):
    try:
        return json.loads(text)
    except ValueError as ex:
        raise MalformedInput("input is not JSON", str(ex))


def _format_float(value):
    if not math.isfinite(value):
        raise ValueError("non-finite value {!r}".format(value))
    text = "%.17g" % (value + 0.0)
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def dumps(obj):
    """
    Serialize with sorted keys and 17 significant digits per float.
    """
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _format_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = sorted(obj.items(), key=lambda kv: str(kv[0]))
        return "{" + ", ".join(
            "{}: {}".format(json.dumps(str(k)), dumps(v))
            for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError("cannot serialize {!r}".format(type(obj)))
