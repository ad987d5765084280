# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Batch command line interface. Each subcommand reads one JSON document
(--in FILE or standard input) and writes one result document
{"status", "payload", "diagnostics"} to standard output.
Exit status: 0 ok, 1 operation error, 2 malformed input.
"""

import argparse
import logging
import sys
from commonconf.backends import use_configparser_backend
from uw_reallinear import dim1, equivalence, lattice, polar, reallinear, torus
from uw_reallinear.codec import (
    complex_to_json, dumps, loads, matrix_to_json, parse_complex,
    parse_lattice, parse_matrix, parse_real_matrix, parse_vector,
    vector_to_json)
from uw_reallinear.config import Tolerance, get_setting
from uw_reallinear.exceptions import MalformedInput, RealLinearException
from uw_reallinear.kernel import operator_norm, singular_values
from uw_reallinear.models import (
    BLOCK, CONJUGATE_PAIR, FORM_KINDS, SPLIT, UNITARY, SPECIAL_UNITARY,
    BlockForm, ConjugatePairForm, NormalizedForm, RealLinearMap, SplitForm)


logger = logging.getLogger(__name__)
OK = 'ok'
ERROR = 'error'


def _field(data, name):
    if not isinstance(data, dict) or name not in data:
        raise MalformedInput("missing field", name)
    return data[name]


def _matrix(data, name):
    return parse_matrix(_field(data, name), name)


def parse_map(obj):
    """
    A map document is the to_json() of one of the four forms.
    """
    kind = _field(obj, 'kind')
    if kind not in FORM_KINDS:
        raise MalformedInput("unknown representation", kind)
    if kind == BLOCK:
        form = BlockForm(*[parse_real_matrix(_field(obj, k), k)
                           for k in ('E1', 'E2', 'E3', 'E4')])
    elif kind == SPLIT:
        form = SplitForm(parse_real_matrix(_field(obj, 'A'), 'A'),
                         parse_real_matrix(_field(obj, 'B'), 'B'))
    elif kind == CONJUGATE_PAIR:
        form = ConjugatePairForm(_matrix(obj, 'M'), _matrix(obj, 'N'))
    else:
        G = _matrix(obj, 'G') if 'G' in obj else None
        form = NormalizedForm(_matrix(obj, 'E'), G)
    return RealLinearMap(form)


def _lattice(obj, tol):
    _, G = parse_lattice(obj)
    return lattice.from_generators(G, tol)


def map_apply(data, args, tol):
    T = parse_map(_field(data, 'map'))
    z = parse_vector(_field(data, 'z'), 'z')
    return {'value': vector_to_json(reallinear.apply(T, z))}, {}


def map_convert(data, args, tol):
    T = parse_map(_field(data, 'map'))
    target = _field(data, 'target')
    converted = reallinear.convert(T, target, tol)
    return {'map': converted.form.to_json()}, {'from': T.kind}


def map_invertible(data, args, tol):
    T = parse_map(_field(data, 'map'))
    sv = singular_values(reallinear.realify(T))
    return ({'invertible': reallinear.is_invertible(T, tol)},
            {'sigma_max': float(sv[0]), 'sigma_min': float(sv[-1])})


def map_majorizes(data, args, tol):
    T = parse_map(_field(data, 'map'))
    norm = reallinear.majorization_margin(T, tol)
    status = (None if norm is None
              else reallinear.strict_status(norm, 1.0, tol))
    return ({'majorizes': reallinear.majorizes(T, tol),
             'boundary': status == reallinear.BOUNDARY},
            {'norm': norm})


def map_normalize(data, args, tol):
    T = parse_map(_field(data, 'map'))
    G, E = reallinear.normalize_post_composition(T, tol)
    norm = operator_norm(E.E)
    status = reallinear.strict_status(norm, 1.0, tol)
    return ({'G': matrix_to_json(G), 'E': matrix_to_json(E.E),
             'contraction': reallinear.contraction_check(E, tol),
             'boundary': status == reallinear.BOUNDARY},
            {'norm': norm})


def polar_cmd(data, args, tol):
    U, P = polar.polar(_matrix(data, 'A'), tol)
    return ({'U': matrix_to_json(U), 'P': matrix_to_json(P.P)},
            {'membership': polar.classify(U, tol).to_json()})


def gram_cmd(data, args, tol):
    return {'P': matrix_to_json(polar.gram(_matrix(data, 'A'), tol).P)}, {}


def unitary_equiv(data, args, tol):
    equivalent, T = polar.unitarily_equivalent(
        _matrix(data, 'A1'), _matrix(data, 'A2'), tol)
    return ({'equivalent': equivalent,
             'T': None if T is None else matrix_to_json(T)}, {})


def sl_normalize(data, args, tol):
    A = polar.sl_normalize(_matrix(data, 'A'), tol)
    return ({'A': matrix_to_json(A)},
            {'membership': polar.classify(A, tol).to_json()})


def lattice_validate(data, args, tol):
    L = _lattice(data, tol)
    return {'valid': True}, {'rank_margin': lattice.rank_margin(L.G)}


def lattice_covolume(data, args, tol):
    return {'covolume': lattice.covolume(_lattice(data, tol))}, {}


def lattice_normalize(data, args, tol):
    L, perm = lattice.permute_to_L1(_lattice(data, tol), tol)
    A, Z = lattice.normalize_to_Lstarstar(L, tol)
    return ({'perm': perm, 'A': matrix_to_json(A),
             'Z': matrix_to_json(Z.Z),
             'split': lattice.to_split_form(Z).to_json()}, {})


def lattice_same(data, args, tol):
    same, witness = lattice.same_lattice(
        _lattice(_field(data, 'L1'), tol),
        _lattice(_field(data, 'L2'), tol), tol)
    return {'same': same, 'witness': witness}, {}


def lattice_equiv(data, args, tol):
    A1 = _matrix(data, 'A1')
    A2 = _matrix(data, 'A2')
    verdict = equivalence.lattice_equivalent(
        A1, A2, mode=args.mode, height=args.height, tol=tol,
        radius=args.radius, budget=args.budget)
    diagnostics = {}
    if verdict.is_equivalent():
        diagnostics['verified'] = equivalence.verify_witness(
            A1, A2, verdict, tol)
    return verdict.to_json(), diagnostics


def sigma_check(data, args, tol):
    B = lattice.sigma_membership(_matrix(data, 'B'), tol)
    return ({'member': True, 'B': B.to_json()['B'],
             'inverse': B.inverse().to_json()['B']}, {})


def torus_reduce(data, args, tol):
    L = _lattice(_field(data, 'lattice'), tol)
    z = parse_vector(_field(data, 'z'), 'z')
    return torus.reduce(L, z, tol).to_json(), {}


def torus_add(data, args, tol):
    L = _lattice(_field(data, 'lattice'), tol)
    p = torus.reduce(L, parse_vector(_field(data, 'p'), 'p'), tol)
    q = torus.reduce(L, parse_vector(_field(data, 'q'), 'q'), tol)
    return torus.torus_add(p, q, tol).to_json(), {}


def dim1_forms(data, args, tol):
    f = dim1.from_ab(parse_complex(_field(data, 'a'), 'a'),
                     parse_complex(_field(data, 'b'), 'b'), tol)
    payload = f.to_json()
    payload['invertible'] = dim1.is_invertible_1d(f, tol)
    payload['class'] = dim1.classify_1d(f, tol)
    diagnostics = {'abs_alpha': abs(f.alpha), 'abs_beta': abs(f.beta)}
    if f.c is not None:
        diagnostics['re_c'] = complex_to_json(f.c)[0]
    return payload, diagnostics


COMMANDS = {
    'map-apply': map_apply,
    'map-convert': map_convert,
    'map-invertible': map_invertible,
    'map-majorizes': map_majorizes,
    'map-normalize': map_normalize,
    'polar': polar_cmd,
    'gram': gram_cmd,
    'unitary-equiv': unitary_equiv,
    'sl-normalize': sl_normalize,
    'lattice-validate': lattice_validate,
    'lattice-covolume': lattice_covolume,
    'lattice-normalize': lattice_normalize,
    'lattice-same': lattice_same,
    'lattice-equiv': lattice_equiv,
    'sigma-check': sigma_check,
    'torus-reduce': torus_reduce,
    'torus-add': torus_add,
    'dim1-forms': dim1_forms,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog='reallinear',
        description='Real-linear maps and lattices in C^n')
    parser.add_argument('command', choices=sorted(COMMANDS))
    parser.add_argument('--in', dest='input', type=str,
                        help='Input file (default=stdin)')
    parser.add_argument('--tol-rel', type=float, default=None,
                        help='relative tolerance (default 1e-9)')
    parser.add_argument('--tol-abs', type=float, default=None,
                        help='absolute tolerance (default 1e-12)')
    parser.add_argument('--height', type=int, default=None,
                        help='height bound H for lattice-equiv')
    parser.add_argument('--radius', type=float, default=None,
                        help='squared radius of the short vector refuter')
    parser.add_argument('--budget', type=int, default=None,
                        help='enumeration budget')
    parser.add_argument('--mode', choices=(UNITARY, SPECIAL_UNITARY),
                        default=UNITARY, help='lattice-equiv mode')
    parser.add_argument('--conf', type=str, default=None,
                        help='configparser file with a [RealLinear] section')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='log to stderr')
    return parser


def _read(args, stdin):
    if args.input is None:
        return stdin.read()
    try:
        with open(args.input) as f:
            return f.read()
    except OSError as ex:
        raise MalformedInput("cannot read input", str(ex))


def _check_options(args):
    if args.radius is not None and not 0 <= args.radius < float('inf'):
        raise MalformedInput("--radius must be finite and >= 0",
                             args.radius)
    if args.height is not None and args.height < 0:
        raise MalformedInput("--height must be >= 0", args.height)


def _error(ex):
    return {'status': ERROR,
            'payload': {'error': ex.__class__.__name__,
                        'message': str(ex)},
            'diagnostics': {}}


def run(argv, stdin=None):
    """
    :return: (exit status, result document)
    """
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(stream=sys.stderr, level=logging.DEBUG)
    if args.conf is not None:
        use_configparser_backend(args.conf, 'RealLinear')
    try:
        _check_options(args)
        tol = Tolerance(
            rel=(get_setting('TOL_REL') if args.tol_rel is None
                 else args.tol_rel),
            abs=(get_setting('TOL_ABS') if args.tol_abs is None
                 else args.tol_abs))
        data = loads(_read(args, sys.stdin if stdin is None else stdin))
        payload, diagnostics = COMMANDS[args.command](data, args, tol)
    except MalformedInput as ex:
        logger.info({'command': args.command, 'malformed': str(ex)})
        return 2, _error(ex)
    except RealLinearException as ex:
        logger.info({'command': args.command, 'error': str(ex)})
        return 1, _error(ex)
    diagnostics['tol'] = tol.to_json()
    return 0, {'status': OK, 'payload': payload,
               'diagnostics': diagnostics}


def main(argv=None):
    code, result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(dumps(result) + "\n")
    return code


if __name__ == '__main__':
    sys.exit(main())
