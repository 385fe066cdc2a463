"""
Ideals of polynomial rings: arithmetic, elimination, colon ideals,
saturation, radical membership, Krull dimension and ideals of minors.
"""
import math
from itertools import combinations

from charloci import log
from charloci.algebra.poly import Poly
from charloci.algebra.groebner import ideal_basis, normal_form
from charloci.exceptions import RingMismatch


class _Empty(object):
    """ Dimension of the empty variety. """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_Empty, cls).__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'EMPTY'

    __str__ = __repr__

    def __reduce__(self):
        return (_Empty, ())


EMPTY = _Empty()

INF = math.inf
""" Codimension of an empty support; larger than every integer. """


class Ideal(object):
    """ Ideal of a :class:`PolyRing` given by generators.

    Two ideals compare equal when their reduced Gröbner bases are equal.

    :param ring: The ring.
    :param generators: Iterable with :class:`Poly`; zero polynomials are
        dropped.
    """
    def __init__(self, ring, generators=()):
        generators = [g for g in generators if not g.is_zero()]
        for g in generators:
            if g.ring != ring:
                raise RingMismatch('Generator {0} is not in {1!r}.'
                                   .format(g, ring))

        self.ring = ring
        self.generators = tuple(generators)
        self._basis = None

    @classmethod
    def unit(cls, ring):
        return cls(ring, [Poly.constant(ring, 1)])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    @property
    def basis(self):
        """ :class:`GroebnerBasis` of this ideal. """
        if self._basis is None:
            self._basis = ideal_basis(self.ring, self.generators)
        return self._basis

    def reduced_generators(self):
        return tuple(self.basis.polys())

    def contains(self, p):
        return normal_form(p, self.basis).is_zero()

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def is_unit(self):
        return self.basis.is_unit()

    def is_zero(self):
        return not self.generators

    def vanishes_at(self, point):
        """ Whether every generator vanishes at a rational point. """
        return all(g.vanishes_at(point) for g in self.generators)

    def dimension(self):
        return krull_dimension(self)

    def codimension(self):
        return codimension(self)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and \
            self.reduced_generators() == other.reduced_generators()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ring, self.reduced_generators()))

    def __repr__(self):
        return 'Ideal({0})'.format([str(g) for g in self.generators])


def _same_ring(i, j):
    if i.ring != j.ring:
        raise RingMismatch('{0!r} and {1!r} differ.'.format(i.ring, j.ring))


def ideal_sum(i, j):
    _same_ring(i, j)
    return Ideal(i.ring, i.generators + j.generators)


def ideal_product(i, j):
    _same_ring(i, j)
    return Ideal(i.ring, [a * b for a in i.generators for b in j.generators])


def _embed(p, ring, extra):
    return Poly(ring, dict(((0,) * extra + e, c) for e, c in p.terms.items()))


def _restrict(p, ring, extra):
    return Poly(ring, dict((e[extra:], c) for e, c in p.terms.items()))


def eliminate(ring, gens, extra):
    """ Return generators of ``(gens) ∩ Q[x]`` where `gens` live in the
    elimination ring with `extra` leading auxiliary variables.
    """
    basis = ideal_basis(gens[0].ring, gens) if gens else None
    if basis is None:
        return []

    return [_restrict(p, ring, extra) for p in basis.polys()
            if all(not any(e[:extra]) for e in p.terms)]


def intersection(i, j):
    """ Return intersection of two ideals, by eliminating `t` from
    ``t*I + (1 - t)*J``.
    """
    _same_ring(i, j)
    ring = i.ring
    if i.is_zero() or j.is_zero():
        return Ideal.zero(ring)

    big = ring.with_elimination_variables(ring.fresh_names(1))
    t = Poly.variable(big, 0)
    gens = [t * _embed(g, big, 1) for g in i.generators] + \
        [(1 - t) * _embed(g, big, 1) for g in j.generators]
    return Ideal(ring, eliminate(ring, gens, 1))


def quotient(i, f):
    """ Return colon ideal ``I : f``.

    :param i: :class:`Ideal`.
    :param f: :class:`Poly` or :class:`Ideal`.
    """
    if isinstance(f, Ideal):
        _same_ring(i, f)
        result = Ideal.unit(i.ring)
        for k, g in enumerate(f.generators):
            colon = quotient(i, g)
            result = colon if k == 0 else intersection(result, colon)
        return result

    if f.is_zero():
        return Ideal.unit(i.ring)

    meet = intersection(i, Ideal(i.ring, [f]))
    return Ideal(i.ring, [g.exact_divide(f) for g in meet.generators])


def saturation(i, f):
    """ Return ``I : f^infinity`` by iterating colon ideals until they are
    stable.
    """
    current = i
    rounds = 0
    while True:
        rounds += 1
        following = quotient(current, f)
        if following == current:
            log.debug('Saturation stable after {0} colon(s).'.format(rounds))
            return current
        current = following


def radical_membership(p, i):
    """ Return True iff `p` lies in the radical of `i`, by testing whether
    ``I + (1 - t*p)`` is the unit ideal.
    """
    if p.ring != i.ring:
        raise RingMismatch('Polynomial and ideal live in different rings.')

    if p.is_zero():
        return True

    ring = i.ring
    big = ring.with_elimination_variables(ring.fresh_names(1))
    t = Poly.variable(big, 0)
    gens = [_embed(g, big, 1) for g in i.generators]
    gens.append(1 - t * _embed(p, big, 1))
    return ideal_basis(big, gens).is_unit()


def krull_dimension(i):
    """ Return dimension of ``V(i)`` in affine space, or EMPTY.

    The dimension equals the size of a largest set of variables containing
    the support of no leading monomial of a Gröbner basis.
    """
    basis = i.basis
    if basis.is_unit():
        return EMPTY

    n = i.ring.num_vars
    supports = [frozenset(k for k, e in enumerate(exp) if e)
                for _, exp in basis.leading_terms()]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            subset = frozenset(subset)
            if not any(s <= subset for s in supports):
                return size
    return 0


def codimension(i):
    """ Return codimension of ``V(i)``, :data:`INF` when it is empty. """
    dim = krull_dimension(i)
    if dim is EMPTY:
        return INF
    return i.ring.num_vars - dim


def leading_term_ideal(i):
    """ Return ideal generated by the leading monomials of `i`. """
    return Ideal(i.ring, [Poly.monomial(i.ring, exp)
                          for _, exp in i.basis.leading_terms()])


def minors_ideal(matrix, t):
    """ Return ideal generated by all t x t minors of a matrix.

    ``t = 0`` gives the unit ideal; ``t`` larger than both dimensions gives
    the zero ideal.
    """
    return Ideal(matrix.ring, matrix.minors(t))
