"""
Transforms of elementary constructible objects on an abelian variety.

An elementary object is a local system on a subtorus of the variety, shifted
and twisted by a character: the subtorus has fundamental group ``Z^2h``,
embedded in the lattice ``Z^2g`` of the variety by an integer matrix, and
the local system is given by ``2h`` commuting invertible monodromy matrices.

Its transform is a Koszul complex over the polynomial ring of the character
torus, on the commuting operators ``c^a_j * M_j * x^a_j+ - x^a_j- * I``,
where ``a_j`` is the image of the j-th basis vector of the subtorus and
`c` the twist. The complex lives in degrees ``-s .. 2h - s``.

:func:`twisted_cohomology` computes the cohomology of the object twisted by
a character directly with rational linear algebra. It is the independent
check on :func:`mellin_transform`: both must agree at every character.
"""
from fractions import Fraction

from sympy import Matrix, Rational

from charloci import log
from charloci.algebra.poly import Poly
from charloci.algebra.matrix import PolyMatrix, rational_rank
from charloci.complexes import (FreeComplex, ChainMap, cone, direct_sum,
                                koszul_complex, koszul_pattern)
from charloci.exceptions import (NonCommuting, NonInvertible, TorusMismatch,
                                 NotSurjective)
from charloci.torus import CharacterPoint
from charloci.utils import to_fraction, parallel_map


def _to_sympy(matrix):
    return Matrix([[Rational(v.numerator, v.denominator) for v in row]
                   for row in matrix])


def _from_sympy(matrix):
    return tuple(tuple(Fraction(int(v.p), int(v.q)) for v in matrix.row(i))
                 for i in range(matrix.rows))


def _identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n))
                 for i in range(n))


def _multiply(a, b):
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(len(b))),
                           Fraction(0)) for j in range(len(b[0])))
                 for i in range(len(a)))


def _power(matrix, k):
    if k < 0:
        matrix, k = _from_sympy(_to_sympy(matrix).inv()), -k
    result = _identity(len(matrix))
    for _ in range(k):
        result = _multiply(result, matrix)
    return result


class LocalSystemObject(object):
    """ Local system on a subtorus, shifted and twisted.

    :param torus: Ambient :class:`charloci.torus.CharacterTorus`.
    :param h: Dimension of the subvariety, ``0 <= h <= g``.
    :param embedding: Integer matrix with ``2g`` rows and ``2h`` linearly
        independent columns.
    :param monodromy: List of ``2h`` commuting invertible rational matrices
        of equal size.
    :param twist: :class:`CharacterPoint` on the ambient torus, default the
        trivial character.
    :param shift: Cohomological shift `s`.
    :param rank: Rank of the local system; needed only when ``h = 0``.
    :raises NonInvertible: When a monodromy matrix is singular.
    :raises NonCommuting: When two monodromy matrices do not commute.
    """
    def __init__(self, torus, h, embedding, monodromy, twist=None, shift=0,
                 rank=None):
        h = int(h)
        if not 0 <= h <= torus.g:
            raise ValueError('h must lie between 0 and {0}, not {1}.'
                             .format(torus.g, h))

        embedding = tuple(tuple(int(e) for e in row) for row in embedding) \
            if h else tuple(() for _ in range(torus.n))
        if len(embedding) != torus.n or \
                any(len(row) != 2 * h for row in embedding):
            raise ValueError('Embedding needs shape {0}x{1}.'
                             .format(torus.n, 2 * h))
        if h and Matrix(embedding).rank() != 2 * h:
            raise ValueError('Embedding columns are linearly dependent.')

        monodromy = [tuple(tuple(to_fraction(v) for v in row) for row in m)
                     for m in monodromy]
        if len(monodromy) != 2 * h:
            raise ValueError('Need {0} monodromy matrices, got {1}.'
                             .format(2 * h, len(monodromy)))

        if monodromy:
            size = len(monodromy[0])
        elif rank is not None:
            size = int(rank)
        else:
            size = 1
        if size < 1:
            raise ValueError('Rank of a local system must be at least 1.')
        if rank is not None and int(rank) != size:
            raise ValueError('Rank {0} does not match monodromy of size {1}.'
                             .format(rank, size))
        if any(len(m) != size or any(len(row) != size for row in m)
               for m in monodromy):
            raise ValueError('Monodromy matrices must be square of size {0}.'
                             .format(size))

        for k, m in enumerate(monodromy):
            if _to_sympy(m).det() == 0:
                raise NonInvertible('Monodromy matrix {0} is singular.'
                                    .format(k))
        for i in range(len(monodromy)):
            for j in range(i + 1, len(monodromy)):
                if _multiply(monodromy[i], monodromy[j]) != \
                        _multiply(monodromy[j], monodromy[i]):
                    raise NonCommuting('Monodromy matrices {0} and {1} do '
                                       'not commute.'.format(i, j))

        self.torus = torus
        self.h = h
        self.embedding = embedding
        self.monodromy = monodromy
        self.twist = torus.point(twist) if twist is not None \
            else torus.trivial_point()
        self.shift = int(shift)
        self.rank = size

    @classmethod
    def constant(cls, torus, shift=None):
        """ Return constant sheaf of rank 1 on the whole variety, by default
        in perverse normalization ``shift = g``.
        """
        n = torus.n
        embedding = [[int(i == j) for j in range(n)] for i in range(n)]
        return cls(torus, torus.g, embedding, [[[1]]] * n,
                   shift=torus.g if shift is None else shift)

    @classmethod
    def skyscraper(cls, torus, rank=1, shift=0):
        return cls(torus, 0, [], [], shift=shift, rank=rank)

    def lattice_vector(self, j):
        """ Return image of the j-th basis vector of the subtorus lattice. """
        return tuple(row[j] for row in self.embedding)

    def degrees(self):
        return range(-self.shift, 2 * self.h - self.shift + 1)

    def euler_characteristic(self):
        """ Return Euler characteristic, from the cohomology at the trivial
        character.
        """
        dims = twisted_cohomology(self, self.torus.trivial_point())
        return sum(d * (-1 if k % 2 else 1) for k, d in dims.items())

    def with_changes(self, **changes):
        fields = dict(torus=self.torus, h=self.h, embedding=self.embedding,
                      monodromy=self.monodromy, twist=self.twist,
                      shift=self.shift, rank=self.rank)
        fields.update(changes)
        return LocalSystemObject(**fields)

    def __eq__(self, other):
        return isinstance(other, LocalSystemObject) and \
            self.torus == other.torus and self.h == other.h and \
            self.embedding == other.embedding and \
            self.monodromy == other.monodromy and \
            self.twist == other.twist and self.shift == other.shift and \
            self.rank == other.rank

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'LocalSystemObject(g={0}, h={1}, rank={2}, shift={3})'.format(
            self.torus.g, self.h, self.rank, self.shift)


def _operator(obj, j):
    ring = obj.torus.ring
    a = obj.lattice_vector(j)
    scale = obj.twist.value(a)
    plus = Poly.monomial(ring, tuple(max(e, 0) for e in a))
    minus = Poly.monomial(ring, tuple(max(-e, 0) for e in a))
    m = obj.monodromy[j]
    entries = [[plus * (m[r][c] * scale) - (minus if r == c else 0)
                for c in range(obj.rank)] for r in range(obj.rank)]
    return PolyMatrix(ring, obj.rank, obj.rank, entries)


def mellin_transform(obj):
    """ Return transform of an elementary object as :class:`FreeComplex`
    over the polynomial ring of the character torus, in degrees
    ``-s .. 2h - s``.
    """
    operators = [_operator(obj, j) for j in range(2 * obj.h)]
    complex_ = koszul_complex(obj.torus.ring, operators, lo=-obj.shift,
                              size=obj.rank)
    log.debug('Transform of {0!r}: {1!r}.'.format(obj, complex_))
    return complex_


def twisted_cohomology(obj, point):
    """ Return dimensions of the cohomology of the object twisted by a
    character, using only rational linear algebra.

    :param obj: :class:`LocalSystemObject`.
    :param point: :class:`CharacterPoint` or sequence of non-zero rationals.
    :return: Dict mapping every degree in ``-s .. 2h - s`` to a dimension.
    """
    point = obj.torus.point(point)
    v = obj.rank
    operators = []
    for j in range(2 * obj.h):
        a = obj.lattice_vector(j)
        scale = obj.twist.value(a) * point.value(a)
        m = obj.monodromy[j]
        operators.append([[m[r][c] * scale - (1 if r == c else 0)
                           for c in range(v)] for r in range(v)])

    pattern = koszul_pattern(len(operators))

    def rank(args):
        n_source, n_target, entries = args
        matrix = [[Fraction(0)] * (n_source * v) for _ in range(n_target * v)]
        for row, col, j, sign in entries:
            for r in range(v):
                for c in range(v):
                    matrix[row * v + r][col * v + c] = \
                        operators[j][r][c] * sign
        return rational_rank(matrix, n_target * v, n_source * v)

    ranks = parallel_map(rank, pattern)
    dims = {}
    sizes = [p[0] for p in pattern] + [1]
    for p, size in enumerate(sizes):
        incoming = ranks[p - 1] if p else 0
        outgoing = ranks[p] if p < len(ranks) else 0
        dims[p - obj.shift] = size * v - incoming - outgoing
    return dims


def verdier_dual(obj):
    """ Return dual object: inverse transposed monodromy, inverse twist and
    shift ``2h - s``.
    """
    monodromy = [_from_sympy(_to_sympy(m).inv().T) for m in obj.monodromy]
    return obj.with_changes(monodromy=monodromy, twist=obj.twist.inverse(),
                            shift=2 * obj.h - obj.shift)


class ElementaryComplex(object):
    """ Direct sum of elementary objects on one torus.

    :param torus: :class:`charloci.torus.CharacterTorus`.
    :param summands: List with :class:`LocalSystemObject`.
    :raises TorusMismatch: When a summand lives on another torus.
    """
    def __init__(self, torus, summands=()):
        summands = list(summands)
        for obj in summands:
            if obj.torus != torus:
                raise TorusMismatch('Summand {0!r} lives on another torus.'
                                    .format(obj))
        self.torus = torus
        self.summands = summands

    def twisted_cohomology(self, point):
        dims = {}
        for obj in self.summands:
            for k, d in twisted_cohomology(obj, point).items():
                dims[k] = dims.get(k, 0) + d
        return dims


def transform_sum(elementary):
    result = FreeComplex.zero(elementary.torus.ring)
    for complex_ in parallel_map(mellin_transform, elementary.summands):
        result = direct_sum(result, complex_)
    return result


class ScalarCone(object):
    """ Cone of multiplication by a polynomial on the transform of an
    object.

    Over a character where the polynomial vanishes the cone splits and its
    cohomology in degree `k` is the cohomology of the object in degrees
    ``k + 1`` and `k`; elsewhere it is zero.

    :param obj: :class:`LocalSystemObject`.
    :param polynomial: :class:`Poly` in the ring of the torus.
    """
    def __init__(self, obj, polynomial):
        if polynomial.ring != obj.torus.ring:
            raise TorusMismatch('Polynomial does not live on the torus.')
        self.obj = obj
        self.polynomial = polynomial
        self.torus = obj.torus

    def transform(self):
        complex_ = mellin_transform(self.obj)
        ring = complex_.ring
        matrices = dict(
            (d, PolyMatrix.identity(ring, complex_.rank(d)).scale(
                self.polynomial)) for d in complex_.degrees())
        return cone(ChainMap(complex_, complex_, matrices, check=False))

    def twisted_cohomology(self, point):
        point = self.torus.point(point)
        dims = twisted_cohomology(self.obj, point)
        degrees = range(min(dims) - 1, max(dims) + 1)
        if self.polynomial.evaluate(point.values) != 0:
            return dict((k, 0) for k in degrees)
        return dict((k, dims.get(k + 1, 0) + dims.get(k, 0)) for k in degrees)

    def __repr__(self):
        return 'ScalarCone({0!r}, {1})'.format(self.obj, self.polynomial)


def _full_support_monodromy(obj):
    """ Return monodromy along the standard basis vectors of the lattice,
    for an object supported on the whole variety.
    """
    n = obj.torus.n
    if obj.h != obj.torus.g:
        raise ValueError('Pullback needs a local system on the whole '
                         'variety.')

    inverse = Matrix(obj.embedding).inv()
    if any(not v.is_integer for v in inverse):
        raise NotSurjective('Embedding of {0!r} is not unimodular.'
                            .format(obj))

    result = []
    for k in range(n):
        m = _identity(obj.rank)
        for j in range(n):
            e = int(inverse[j, k])
            if e:
                m = _multiply(m, _power(obj.monodromy[j], e))
        result.append(m)
    return result


def pullback(surjection, obj, twist=None):
    """ Return pullback of a local system along a surjective morphism of
    abelian varieties, twisted by a character of the source.

    Monodromy along the i-th basis vector of the source lattice is
    ``prod_j N_j^f_ji``, and the shift grows by the relative dimension so
    that perverse objects stay perverse.

    :param surjection: :class:`charloci.torus.LatticeSurjection` from the
        lattice of the source to the lattice of `obj`.
    :param obj: :class:`LocalSystemObject` on the whole target variety.
    :param twist: Optional character of the source.
    """
    if obj.torus.g != surjection.target_g:
        raise TorusMismatch('Object does not live on the target of the '
                            'lattice map.')

    source = surjection.source
    base = _full_support_monodromy(obj)
    monodromy = []
    pulled_twist = []
    for i in range(source.n):
        column = surjection.column(i)
        m = _identity(obj.rank)
        for j, e in enumerate(column):
            if e:
                m = _multiply(m, _power(base[j], e))
        monodromy.append(m)
        pulled_twist.append(obj.twist.value(column))

    point = CharacterPoint(pulled_twist)
    if twist is not None:
        point = point * source.point(twist)

    embedding = [[int(i == j) for j in range(source.n)]
                 for i in range(source.n)]
    return LocalSystemObject(source, source.g, embedding, monodromy, point,
                             obj.shift + source.g - surjection.target_g)


def spectrum_coordinates(obj):
    """ Return sorted list of rational numbers where fibers of the transform
    may jump: rational eigenvalues of the monodromy, twist coordinates and
    their inverses.
    """
    values = set()
    for m in obj.monodromy:
        for eigenvalue in _to_sympy(m).eigenvals():
            if eigenvalue.is_rational and eigenvalue != 0:
                values.add(Fraction(int(eigenvalue.p), int(eigenvalue.q)))
    values.update(obj.twist.values)
    values.update([1 / v for v in values])
    return sorted(values)
