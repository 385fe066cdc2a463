"""
JSON file formats.

Three kinds of input files are understood, told apart by their keys:

* object files ``{g, objects: [...]}`` with local systems on subtori,
  optionally combined into the cone of multiplication by a polynomial,
* complex files ``{ring, lo, hi, ranks, differentials}``,
* module files ``{ring, module: {generators, relations}}`` holding the input
  of an intersection complex.

Rationals are written as strings ``'p/q'``, polynomials in the text grammar
of :func:`charloci.algebra.poly.parse_poly`. Output is written with sorted
keys, so identical inputs give identical bytes.

An object file looks like::

    {
        "g": 1,
        "objects": [
            {"id": "L", "h": 1, "embedding": [[1, 0], [0, 1]],
             "monodromy": [[["-1"]], [["1"]]], "twist": ["1", "1"],
             "shift": 1}
        ]
    }

"""
import json
import math
from fractions import Fraction

from charloci.algebra.ideal import Ideal
from charloci.algebra.matrix import PolyMatrix
from charloci.algebra.modules import FPModule
from charloci.algebra.poly import Poly, format_poly, parse_poly
from charloci.algebra.ring import PolyRing
from charloci.complexes import FreeComplex
from charloci.exceptions import ParseError
from charloci.torus import (CharacterPoint, CharacterTorus, LatticeSurjection,
                            TranslatedSubtorus)
from charloci.transform import (ElementaryComplex, LocalSystemObject,
                                ScalarCone, pullback, spectrum_coordinates,
                                transform_sum)
from charloci.utils import format_fraction, to_fraction


def loads(text):
    """ Parse JSON text.

    :raises ParseError: With line and column of the syntax error.
    """
    try:
        return json.loads(text)
    except ValueError as e:
        raise ParseError('Invalid JSON: {0}.'.format(getattr(e, 'msg', e)),
                         getattr(e, 'lineno', None), getattr(e, 'colno', None))


def load(path):
    with open(path, 'r') as f:
        return loads(f.read())


def encode(value):
    """ Return JSON compatible version of a value.

    Rationals become strings ``'p/q'``, infinity becomes ``'inf'``, and
    polynomials, ideals, points, subtori, complexes and objects are written
    in their file formats.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        raise ValueError('Refusing to write inexact number {0!r}.'
                         .format(value))
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, Poly):
        return format_poly(value)
    if isinstance(value, Ideal):
        return [format_poly(p) for p in value.generators]
    if isinstance(value, CharacterPoint):
        return [format_fraction(v) for v in value.values]
    if isinstance(value, TranslatedSubtorus):
        return {'basis': [list(b) for b in value.basis],
                'values': [format_fraction(v) for v in value.values]}
    if isinstance(value, FreeComplex):
        return complex_to_json(value)
    if isinstance(value, FPModule):
        return module_to_json(value)
    if isinstance(value, dict):
        return dict((str(k), encode(v)) for k, v in value.items())
    if isinstance(value, (list, tuple, set, frozenset)):
        return [encode(v) for v in value]
    raise TypeError('Cannot encode {0!r}.'.format(value))


def dumps(value):
    return json.dumps(encode(value), sort_keys=True, indent=2)


def _require(data, key, where):
    if not isinstance(data, dict) or key not in data:
        raise ParseError('{0} lacks key {1!r}.'.format(where, key))
    return data[key]


def _integer(value, where):
    if isinstance(value, bool):
        raise ParseError('{0}: {1!r} is not an integer.'.format(where, value))
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ParseError('{0}: {1!r} is not an integer.'.format(where, value))


def _rational(value, where):
    try:
        return to_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParseError('{0}: {1!r} is not a rational p/q.'
                         .format(where, value))


def _poly(text, ring, where):
    try:
        return parse_poly(str(text), ring)
    except ParseError as e:
        raise ParseError('{0}: {1}'.format(where, e.args[0] if e.args
                                           else e), e.line, e.column)


def ring_from_json(data):
    names = _require(data, 'vars', 'Ring')
    try:
        return PolyRing([str(n) for n in names], data.get('order'))
    except ValueError as e:
        raise ParseError('Ring: {0}'.format(e))


def ring_to_json(ring):
    return {'vars': list(ring.var_names), 'order': ring.order}


def matrix_from_json(rows, ring, shape, where):
    """ Return :class:`PolyMatrix` from a list of rows of polynomial
    strings.

    :param shape: Tuple (rows, columns) the matrix must have.
    """
    n_rows, n_cols = shape
    if not isinstance(rows, list) or len(rows) != n_rows or \
            any(not isinstance(r, list) or len(r) != n_cols for r in rows):
        raise ParseError('{0}: expected {1}x{2} matrix.'
                         .format(where, n_rows, n_cols))
    entries = [[_poly(e, ring, '{0}[{1}][{2}]'.format(where, i, j))
                for j, e in enumerate(row)] for i, row in enumerate(rows)]
    return PolyMatrix(ring, n_rows, n_cols, entries)


def matrix_to_json(matrix):
    return [[format_poly(e) for e in row] for row in matrix.entries]


def complex_from_json(data):
    """ Return :class:`charloci.complexes.FreeComplex` from its file format.
    """
    ring = ring_from_json(_require(data, 'ring', 'Complex'))
    ranks = dict((_integer(d, 'Complex degree'),
                  _integer(r, 'Complex rank'))
                 for d, r in _require(data, 'ranks', 'Complex').items())

    differentials = {}
    for d, rows in data.get('differentials', {}).items():
        d = _integer(d, 'Differential degree')
        shape = (ranks.get(d + 1, 0), ranks.get(d, 0))
        differentials[d] = matrix_from_json(rows, ring, shape,
                                            'Differential {0}'.format(d))

    lo, hi = data.get('lo'), data.get('hi')
    return FreeComplex(ring, ranks, differentials,
                       None if lo is None else _integer(lo, 'lo'),
                       None if hi is None else _integer(hi, 'hi'))


def complex_to_json(complex_):
    return {
        'ring': ring_to_json(complex_.ring),
        'lo': complex_.lo,
        'hi': complex_.hi,
        'ranks': dict((str(d), r) for d, r in complex_.ranks.items()),
        'differentials': dict((str(d), matrix_to_json(m))
                              for d, m in complex_.differentials.items()),
    }


def module_from_json(data, ring):
    """ Return :class:`FPModule` from ``{generators, relations}``, relations
    given as rows, one per generator.
    """
    n = _integer(_require(data, 'generators', 'Module'), 'Module generators')
    rows = data.get('relations') or []
    if not rows or not any(rows):
        return FPModule.free(ring, n)
    m = len(rows[0]) if isinstance(rows[0], list) else -1
    return FPModule(ring, n, matrix_from_json(rows, ring, (n, m),
                                              'Module relations'))


def module_to_json(module):
    return {'generators': module.n_generators,
            'relations': matrix_to_json(module.relations)}


def _object_from_json(data, torus, where):
    if 'pullback' in data:
        return _pullback_from_json(data['pullback'], torus, where)

    h = _integer(_require(data, 'h', where), where + ' h')
    monodromy = [[[_rational(v, where + ' monodromy') for v in row]
                  for row in m] for m in data.get('monodromy', [])]
    twist = data.get('twist')
    if twist is not None:
        twist = [_rational(v, where + ' twist') for v in twist]
    rank = data.get('rank')
    return LocalSystemObject(
        torus, h, data.get('embedding', []), monodromy, twist,
        _integer(data.get('shift', 0), where + ' shift'),
        None if rank is None else _integer(rank, where + ' rank'))


def _pullback_from_json(data, torus, where):
    target_g = _integer(_require(data, 'target_g', where), where)
    surjection = LatticeSurjection(torus.g, target_g,
                                   _require(data, 'matrix', where))
    base = _object_from_json(_require(data, 'object', where),
                             CharacterTorus(target_g, 'y'), where + ' base')
    twist = data.get('twist')
    if twist is not None:
        twist = [_rational(v, where + ' twist') for v in twist]
    return pullback(surjection, base, twist).with_changes(torus=torus)


def object_to_json(obj, id_):
    return {
        'id': id_,
        'h': obj.h,
        'embedding': [list(row) for row in obj.embedding],
        'monodromy': [[[format_fraction(v) for v in row] for row in m]
                      for m in obj.monodromy],
        'twist': [format_fraction(v) for v in obj.twist.values],
        'shift': obj.shift,
        'rank': obj.rank,
    }


class ObjectFile(object):
    """ Contents of an object file.

    :param torus: :class:`charloci.torus.CharacterTorus`.
    :param objects: List of tuples (id, :class:`LocalSystemObject`).
    :param cone: Optional tuple (id, :class:`Poly`) requesting the cone of
        multiplication by the polynomial on the transform of that object.
    """
    def __init__(self, torus, objects, cone=None):
        self.torus = torus
        self.objects = list(objects)
        self.cone = cone

    def object(self, id_):
        for name, obj in self.objects:
            if name == id_:
                return obj
        raise ParseError('No object with id {0!r}.'.format(id_))

    @property
    def source(self):
        """ Object whose transform is computed: an
        :class:`ElementaryComplex` or a :class:`ScalarCone`.
        """
        if self.cone is not None:
            id_, polynomial = self.cone
            return ScalarCone(self.object(id_), polynomial)
        return ElementaryComplex(self.torus,
                                 [obj for _, obj in self.objects])

    def transform(self):
        source = self.source
        if isinstance(source, ScalarCone):
            return source.transform()
        return transform_sum(source)

    def twisted_cohomology(self, point):
        return self.source.twisted_cohomology(point)

    def spectrum(self):
        """ Return sorted rationals where fibers may jump. """
        values = set()
        for _, obj in self.objects:
            values.update(spectrum_coordinates(obj))
        return sorted(values)

    def euler_characteristic(self):
        dims = self.twisted_cohomology(self.torus.trivial_point())
        return sum(d * (-1 if k % 2 else 1) for k, d in dims.items())

    def __repr__(self):
        return 'ObjectFile(g={0}, {1} object(s))'.format(self.torus.g,
                                                         len(self.objects))


def object_file_from_json(data):
    g = _integer(_require(data, 'g', 'Object file'), 'g')
    torus = CharacterTorus(g, order=data.get('order'))

    objects = []
    for i, entry in enumerate(_require(data, 'objects', 'Object file')):
        where = 'Object {0}'.format(i)
        id_ = str(entry.get('id', i))
        objects.append((id_, _object_from_json(entry, torus, where)))

    cone = None
    if data.get('cone') is not None:
        spec = data['cone']
        cone = (str(_require(spec, 'object', 'Cone')),
                _poly(_require(spec, 'polynomial', 'Cone'), torus.ring,
                      'Cone polynomial'))

    result = ObjectFile(torus, objects, cone)
    if cone is not None:
        result.object(cone[0])
    return result


def object_file_to_json(object_file):
    data = {
        'g': object_file.torus.g,
        'order': object_file.torus.ring.order,
        'objects': [object_to_json(obj, id_)
                    for id_, obj in object_file.objects],
    }
    if object_file.cone is not None:
        data['cone'] = {'object': object_file.cone[0],
                        'polynomial': format_poly(object_file.cone[1])}
    return data


class ModuleFile(object):
    """ Contents of a module file.

    :param module: :class:`FPModule`.
    :param torus_mode: Measure supports on the torus.
    :param torsion: List of torsion :class:`FPModule` to test for maps into
        the intersection complex.
    """
    def __init__(self, module, torus_mode=False, torsion=()):
        self.module = module
        self.torus_mode = torus_mode
        self.torsion = list(torsion)


def module_file_from_json(data):
    ring = ring_from_json(_require(data, 'ring', 'Module file'))
    module = module_from_json(_require(data, 'module', 'Module file'), ring)
    torsion = [module_from_json(t, ring) for t in data.get('torsion', [])]
    return ModuleFile(module, bool(data.get('torus_mode', False)), torsion)


def module_file_to_json(module_file):
    data = {
        'ring': ring_to_json(module_file.module.ring),
        'module': module_to_json(module_file.module),
        'torus_mode': module_file.torus_mode,
    }
    if module_file.torsion:
        data['torsion'] = [module_to_json(t) for t in module_file.torsion]
    return data


def file_kind(data):
    """ Return 'objects', 'complex' or 'module'. """
    if isinstance(data, dict):
        if 'objects' in data:
            return 'objects'
        if 'ranks' in data:
            return 'complex'
        if 'module' in data:
            return 'module'
    raise ParseError('Cannot tell object, complex or module file apart.')


def from_json(data):
    """ Return :class:`ObjectFile`, :class:`FreeComplex` or
    :class:`ModuleFile`.
    """
    kind = file_kind(data)
    if kind == 'objects':
        return object_file_from_json(data)
    if kind == 'complex':
        return complex_from_json(data)
    return module_file_from_json(data)


def to_json(value):
    if isinstance(value, ObjectFile):
        return object_file_to_json(value)
    if isinstance(value, ModuleFile):
        return module_file_to_json(value)
    return complex_to_json(value)
