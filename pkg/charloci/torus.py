"""
The character torus of a lattice of rank ``n = 2g`` and the geometry on it.

Functions on the torus form the Laurent ring ``Q[x1^+-1, ..., xn^+-1]``. It
is represented by the polynomial ring ``Q[x1, ..., xn]``: all computations
run there and answers about the torus are obtained by saturating ideals at
the product of the coordinates, :attr:`CharacterTorus.unit_monomial`.

A translated subtorus is given by a basis ``b_1 .. b_r`` of a sublattice
and non-zero values ``c_1 .. c_r``; it is the set of points `x` with
``x^b_j = c_j``. Lattice computations use exact integer Smith and Hermite
forms built on :mod:`sympy` matrices.
"""
import random
from fractions import Fraction

from sympy import Matrix, ZZ, eye
from sympy.matrices.normalforms import smith_normal_form

from charloci import conf, log
from charloci.algebra.ring import PolyRing
from charloci.algebra.poly import Poly
from charloci.algebra.ideal import Ideal, saturation
from charloci.exceptions import (NotSurjective, TorusMismatch, ZeroValue,
                                 RingMismatch)
from charloci.utils import to_fraction, format_fraction

SAMPLE_POOL = tuple(Fraction(v) for v in
                    (1, -1, 2, -2, 3, -3, Fraction(1, 2), Fraction(-1, 2),
                     Fraction(1, 3), Fraction(-1, 3), 5, -5))
""" Coordinates drawn when sampling character points. """


class UnitModel(object):
    """ Laurent ring of a polynomial ring: every variable is a unit.

    :param ring: :class:`PolyRing`.
    """
    def __init__(self, ring):
        self.ring = ring
        self.n = ring.num_vars
        self.unit_monomial = Poly.monomial(ring, (1,) * self.n)

    def saturate_at_units(self, ideal):
        return saturate_at_units(ideal, self)

    def point(self, values):
        """ Return :class:`CharacterPoint` with one coordinate per variable.
        """
        point = CharacterPoint(values)
        if len(point) != self.n:
            raise TorusMismatch('Point has {0} coordinates, torus needs {1}.'
                                .format(len(point), self.n))
        return point

    def trivial_point(self):
        return CharacterPoint([1] * self.n)

    def maximal_ideal(self, point):
        """ Return ideal of a single point. """
        return Ideal(self.ring, [Poly.variable(self.ring, i) - c
                                 for i, c in enumerate(self.point(point))])

    def __eq__(self, other):
        return isinstance(other, UnitModel) and self.ring == other.ring

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.ring)

    def __repr__(self):
        return 'UnitModel({0!r})'.format(self.ring)


class CharacterTorus(UnitModel):
    """ Character torus of a lattice of rank ``2 * g``.

    :param g: Dimension of the abelian variety, 0 or larger.
    :param prefix: Prefix of the variable names, which are ``prefix1`` up to
        ``prefix2g``.
    :param order: Monomial order of the ring, default
        :attr:`Config.MONOMIAL_ORDER`.
    """
    def __init__(self, g, prefix='x', order=None):
        g = int(g)
        if g < 0:
            raise ValueError('g must be 0 or larger, not {0}.'.format(g))

        self.g = g
        super(CharacterTorus, self).__init__(
            PolyRing(['{0}{1}'.format(prefix, i + 1) for i in range(2 * g)],
                     order))

    def __repr__(self):
        return 'CharacterTorus(g={0})'.format(self.g)


class CharacterPoint(object):
    """ Point of a character torus, a tuple of non-zero rationals.

    Points multiply coordinatewise, which is the group law of the torus.

    :param values: Iterable with rationals, strings 'p/q' are accepted.
    :raises ZeroValue: When a coordinate is zero.
    """
    __slots__ = ('values',)

    def __init__(self, values):
        values = tuple(to_fraction(v) for v in values)
        if any(v == 0 for v in values):
            raise ZeroValue('Character point {0} has a zero coordinate.'
                            .format([format_fraction(v) for v in values]))
        self.values = values

    @classmethod
    def sample(cls, n, rng, extra=()):
        """ Draw point with coordinates from :data:`SAMPLE_POOL` plus extra
        values.

        :param n: Number of coordinates.
        :param rng: :class:`random.Random` instance.
        :param extra: Additional non-zero rationals to draw from.
        """
        pool = list(SAMPLE_POOL)
        pool.extend(v for v in (to_fraction(e) for e in extra)
                    if v and v not in pool)
        return cls(rng.choice(pool) for _ in range(n))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __mul__(self, other):
        if len(other) != len(self):
            raise TorusMismatch('Points live on different tori.')
        return CharacterPoint(a * b for a, b in zip(self, other))

    def inverse(self):
        return CharacterPoint(1 / v for v in self.values)

    def value(self, vector):
        """ Return ``x^vector``, the value of the character on a lattice
        vector.
        """
        result = Fraction(1)
        for c, e in zip(self.values, vector):
            if e:
                result *= c ** e
        return result

    def is_torsion(self, max_order=None):
        return all(_is_root_of_unity(c, max_order) for c in self.values)

    def __eq__(self, other):
        return isinstance(other, CharacterPoint) and \
            self.values == other.values

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.values)

    def __str__(self):
        return '({0})'.format(', '.join(format_fraction(v)
                                        for v in self.values))

    def __repr__(self):
        return 'CharacterPoint{0}'.format(self)


def _is_root_of_unity(c, max_order=None):
    if max_order is None:
        max_order = conf.MAX_TORSION_ORDER
    if max_order < 1:
        raise ValueError('max_order must be 1 or larger.')
    return any(c ** k == 1 for k in range(1, max_order + 1))


class TranslatedSubtorus(object):
    """ Translate of a subtorus, ``{x : x^b_j = c_j for all j}``.

    :param torus: :class:`CharacterTorus`.
    :param basis: List of `r` linearly independent integer vectors of length
        ``torus.n``.
    :param values: List of `r` non-zero rationals.
    :raises ZeroValue: When a value is zero.
    """
    def __init__(self, torus, basis, values):
        basis = tuple(tuple(int(e) for e in b) for b in basis)
        values = tuple(to_fraction(v) for v in values)
        if len(basis) != len(values):
            raise ValueError('Need one value per basis vector.')
        if any(len(b) != torus.n for b in basis):
            raise TorusMismatch('Basis vectors need {0} entries.'
                                .format(torus.n))
        if any(v == 0 for v in values):
            raise ZeroValue('Subtorus values must be non-zero.')
        if basis and Matrix(basis).rank() != len(basis):
            raise ValueError('Basis vectors are linearly dependent.')

        self.torus = torus
        self.basis = basis
        self.values = values

    @property
    def dimension(self):
        return self.torus.n - len(self.basis)

    @property
    def codimension(self):
        return len(self.basis)

    def ideal(self):
        return subtorus_ideal(self)

    def contains(self, point):
        return all(point.value(b) == c for b, c in zip(self.basis,
                                                       self.values))

    def is_primitive(self):
        return is_primitive(self)

    def normalized(self):
        """ Return same subtorus with basis in row Hermite normal form and
        values transformed along.
        """
        if not self.basis:
            return self

        form, transform = row_hermite_form(self.basis)
        values = []
        for row in transform:
            value = Fraction(1)
            for c, e in zip(self.values, row):
                if e:
                    value *= c ** e
            values.append(value)
        return TranslatedSubtorus(self.torus, form, values)

    def __eq__(self, other):
        if not isinstance(other, TranslatedSubtorus):
            return False
        first, second = self.normalized(), other.normalized()
        return first.torus == second.torus and \
            first.basis == second.basis and first.values == second.values

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        normal = self.normalized()
        return hash((normal.basis, normal.values))

    def __repr__(self):
        return 'TranslatedSubtorus(basis={0}, values={1})'.format(
            [list(b) for b in self.basis],
            [format_fraction(v) for v in self.values])


def _binomial(ring, vector, value):
    plus = tuple(max(e, 0) for e in vector)
    minus = tuple(max(-e, 0) for e in vector)
    return Poly.monomial(ring, plus) - Poly.monomial(ring, minus, value)


def subtorus_ideal(subtorus):
    """ Return ideal of a translated subtorus: the binomials
    ``x^b+ - c * x^b-`` saturated at the unit monomial.
    """
    torus = subtorus.torus
    if not subtorus.basis:
        return Ideal.zero(torus.ring)

    gens = [_binomial(torus.ring, b, c)
            for b, c in zip(subtorus.basis, subtorus.values)]
    return saturate_at_units(Ideal(torus.ring, gens), torus)


def torsion_check(subtorus, max_order=None):
    """ Whether every value is a root of unity of order at most
    `max_order`, default :attr:`Config.MAX_TORSION_ORDER`.

    Over the rationals only 1 and -1 pass.
    """
    return all(_is_root_of_unity(c, max_order) for c in subtorus.values)


def saturate_at_units(ideal, torus):
    """ Return ``ideal : (x1 * ... * xn)^infinity``. """
    if ideal.ring != torus.ring:
        raise TorusMismatch('Ideal does not live on {0!r}.'.format(torus))
    if ideal.is_zero() or not torus.n:
        return ideal
    return saturation(ideal, torus.unit_monomial)


def smith_decomposition(matrix):
    """ Return Smith form of an integer matrix with its transforms.

    :param matrix: List of rows with integers.
    :return: Tuple (D, L, R) of :class:`sympy.Matrix` with ``L * A * R = D``,
        `L` and `R` unimodular and `D` diagonal with non-negative entries,
        each dividing the next.
    """
    a = Matrix(matrix)
    rows, cols = a.shape
    left, right = eye(rows), eye(cols)

    def add_row(target, source, factor):
        a.row_op(target, lambda v, j: v + factor * a[source, j])
        left.row_op(target, lambda v, j: v + factor * left[source, j])

    def add_col(target, source, factor):
        a.col_op(target, lambda v, i: v + factor * a[i, source])
        right.col_op(target, lambda v, i: v + factor * right[i, source])

    for s in range(min(rows, cols)):
        while True:
            entries = [(abs(a[i, j]), i, j) for i in range(s, rows)
                       for j in range(s, cols) if a[i, j]]
            if not entries:
                return a, left, right

            _, i, j = min(entries)
            if i != s:
                a.row_swap(s, i)
                left.row_swap(s, i)
            if j != s:
                a.col_swap(s, j)
                right.col_swap(s, j)

            cleared = True
            for i in range(s + 1, rows):
                q = a[i, s] // a[s, s]
                if q:
                    add_row(i, s, -q)
                cleared = cleared and not a[i, s]
            for j in range(s + 1, cols):
                q = a[s, j] // a[s, s]
                if q:
                    add_col(j, s, -q)
                cleared = cleared and not a[s, j]
            if not cleared:
                continue

            stubborn = next((i for i in range(s + 1, rows)
                             for j in range(s + 1, cols)
                             if a[i, j] % a[s, s]), None)
            if stubborn is None:
                break
            add_row(s, stubborn, 1)

        if a[s, s] < 0:
            a.row_op(s, lambda v, j: -v)
            left.row_op(s, lambda v, j: -v)

    return a, left, right


def invariant_factors(matrix):
    """ Return non-zero diagonal entries of the Smith form. """
    m = Matrix(matrix)
    if not m.rows or not m.cols:
        return []
    form = smith_normal_form(m, domain=ZZ)
    return [abs(int(form[k, k])) for k in range(min(form.shape))
            if form[k, k]]


def row_hermite_form(vectors):
    """ Return row Hermite normal form of integer vectors of full rank.

    :param vectors: List of `r` integer vectors.
    :return: Tuple (H, U) of lists of rows, with ``H = U * vectors``, `U`
        unimodular, pivots positive and entries above pivots reduced.
    """
    rows = [list(v) for v in vectors]
    r = len(rows)
    n = len(rows[0]) if rows else 0
    transform = [[int(i == j) for j in range(r)] for i in range(r)]

    def subtract(target, source, q):
        rows[target] = [a - q * b for a, b in zip(rows[target], rows[source])]
        transform[target] = [a - q * b for a, b in
                             zip(transform[target], transform[source])]

    def swap(i, j):
        rows[i], rows[j] = rows[j], rows[i]
        transform[i], transform[j] = transform[j], transform[i]

    pivot = 0
    for col in range(n):
        if pivot == r:
            break

        while True:
            candidates = [i for i in range(pivot, r) if rows[i][col]]
            if not candidates:
                break
            swap(pivot, min(candidates, key=lambda i: abs(rows[i][col])))
            for k in range(pivot + 1, r):
                q = rows[k][col] // rows[pivot][col]
                if q:
                    subtract(k, pivot, q)
            if all(not rows[k][col] for k in range(pivot + 1, r)):
                break

        if not rows[pivot][col]:
            continue

        if rows[pivot][col] < 0:
            rows[pivot] = [-a for a in rows[pivot]]
            transform[pivot] = [-a for a in transform[pivot]]
        for k in range(pivot):
            q = rows[k][col] // rows[pivot][col]
            if q:
                subtract(k, pivot, q)
        pivot += 1

    return [tuple(row) for row in rows], [tuple(row) for row in transform]


def is_primitive(subtorus):
    """ Whether the basis spans a saturated sublattice, so the subtorus is
    connected.
    """
    if not subtorus.basis:
        return True
    return all(f == 1 for f in invariant_factors(subtorus.basis))


def kernel_basis(matrix):
    """ Return basis of the kernel of an integer matrix as list of integer
    vectors. The basis spans a saturated sublattice.
    """
    cols = len(matrix[0]) if matrix else 0
    if not matrix or not cols:
        return [tuple(int(i == j) for j in range(cols)) for i in range(cols)]

    form, _, right = smith_decomposition(matrix)
    rank = sum(1 for k in range(min(form.shape)) if form[k, k])
    return [tuple(int(right[i, j]) for i in range(cols))
            for j in range(rank, cols)]


class LatticeSurjection(object):
    """ Surjective map of lattices ``Z^(2 source_g) -> Z^(2 target_g)``,
    induced by a surjective morphism of abelian varieties with connected
    fibers.

    :param source_g: Dimension of the source.
    :param target_g: Dimension of the target.
    :param matrix: Integer matrix with ``2 * target_g`` rows and
        ``2 * source_g`` columns.
    :raises NotSurjective: When the map is not onto.
    """
    def __init__(self, source_g, target_g, matrix):
        matrix = tuple(tuple(int(e) for e in row) for row in matrix)
        rows, cols = 2 * target_g, 2 * source_g
        if len(matrix) != rows or any(len(row) != cols for row in matrix):
            raise ValueError('Lattice map needs shape {0}x{1}.'
                             .format(rows, cols))

        factors = invariant_factors(matrix) if rows else []
        if len(factors) != rows or any(f != 1 for f in factors):
            raise NotSurjective('Invariant factors {0} of the lattice map are '
                                'not all 1.'.format(factors))

        self.source_g = source_g
        self.target_g = target_g
        self.matrix = matrix
        self.source = CharacterTorus(source_g)
        self.target = CharacterTorus(target_g, prefix='y')

    def image(self, vector):
        return tuple(sum(a * v for a, v in zip(row, vector))
                     for row in self.matrix)

    def column(self, index):
        return tuple(row[index] for row in self.matrix)


class MonomialMap(object):
    """ Ring map sending every source variable to a Laurent monomial of the
    target ring, optionally scaled.

    :param source: Source :class:`PolyRing`.
    :param target: Target :class:`PolyRing`.
    :param exponents: One exponent vector of the target per source variable.
    :param scales: Optional non-zero rational factor per source variable.
    """
    def __init__(self, source, target, exponents, scales=None):
        exponents = [tuple(e) for e in exponents]
        if len(exponents) != source.num_vars:
            raise ValueError('Need one image per source variable.')
        self.source = source
        self.target = target
        self.exponents = exponents
        self.scales = [to_fraction(s) for s in
                       (scales or [1] * source.num_vars)]

    def laurent_terms(self, p):
        terms = {}
        for exp, coef in p.terms.items():
            image = [0] * self.target.num_vars
            for e, column, scale in zip(exp, self.exponents, self.scales):
                if e:
                    coef *= scale ** e
                    image = [a + e * b for a, b in zip(image, column)]
            image = tuple(image)
            terms[image] = terms.get(image, 0) + coef
        return dict((e, c) for e, c in terms.items() if c)

    def apply(self, p):
        """ Return image of a polynomial as tuple (q, shift): `q` is a
        polynomial and the image equals ``q / x^shift``.
        """
        if p.ring != self.source:
            raise RingMismatch('Polynomial does not live in the source ring.')

        terms = self.laurent_terms(p)
        shift = [0] * self.target.num_vars
        for exp in terms:
            shift = [max(s, -e) for s, e in zip(shift, exp)]
        q = Poly(self.target, dict((tuple(e + s for e, s in zip(exp, shift)),
                                    c) for exp, c in terms.items()))
        return q, tuple(shift)

    def __call__(self, p):
        return self.apply(p)[0]


def restriction_substitution(surjection):
    """ Return :class:`MonomialMap` pulling functions on the source torus
    back along the embedding of the target torus: ``x_i -> y^f(e_i)``.
    """
    exponents = [surjection.column(i) for i in range(2 * surjection.source_g)]
    return MonomialMap(surjection.source.ring, surjection.target.ring,
                       exponents)


def linear_subvariety(surjection, point):
    """ Return translate by `point` of the image of the target torus, as a
    :class:`TranslatedSubtorus` of the source torus.

    The image consists of the characters trivial on the kernel of the lattice
    map, so its basis is a basis of that kernel.
    """
    torus = surjection.source
    point = torus.point(point)
    basis = kernel_basis(surjection.matrix) if surjection.target_g \
        else [tuple(int(i == j) for j in range(torus.n))
              for i in range(torus.n)]
    values = [point.value(b) for b in basis]
    log.debug('Linear subvariety of codimension {0} in {1!r}.'
              .format(len(basis), torus))
    return TranslatedSubtorus(torus, basis, values).normalized()


def sample_points(n, count, seed, extra=()):
    """ Return list of `count` points drawn with a seeded generator. """
    rng = random.Random(seed)
    return [CharacterPoint.sample(n, rng, extra) for _ in range(count)]
