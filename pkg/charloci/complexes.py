"""
Bounded complexes of free modules and the operations of the derived
category that the rest of the package builds on.

A :class:`FreeComplex` has a free module of rank ``ranks[d]`` in every
degree ``d`` and differentials ``d^d: R^ranks[d] -> R^ranks[d+1]`` stored as
:class:`PolyMatrix` with ``ranks[d + 1]`` rows. A :class:`ModuleComplex`
does the same with finitely presented modules; it is only an intermediate
value and is turned into a free complex with :func:`free_replacement`.

Quasi-isomorphism is never decided in general. Two complexes are compared
through their cohomology modules with :func:`cohomology_agrees`.
"""
from collections import namedtuple
from itertools import combinations

from charloci import log
from charloci.algebra.poly import Poly
from charloci.algebra.matrix import PolyMatrix, rational_rank
from charloci.algebra.ideal import Ideal, INF, codimension
from charloci.algebra.groebner import syzygies, lift, minimal_generators
from charloci.algebra.modules import FPModule, subquotient, isomorphic
from charloci.exceptions import (InvalidComplex, NotAChainMap,
                                 ResolutionTooLong, RingMismatch, ZeroValue)
from charloci.utils import parallel_map, to_fraction


class FreeComplex(object):
    """ Bounded complex of free modules.

    :param ring: The ring.
    :param ranks: Dict mapping degree to rank.
    :param differentials: Dict mapping degree `d` to :class:`PolyMatrix`
        with ``ranks[d + 1]`` rows and ``ranks[d]`` columns. Missing
        differentials are zero.
    :param lo: Lowest degree, default the lowest degree with nonzero rank.
    :param hi: Highest degree, default the highest degree with nonzero rank.
    :param check: Verify that consecutive differentials compose to zero.
    :raises InvalidComplex: When shapes do not fit or ``d o d != 0``.
    """
    def __init__(self, ring, ranks, differentials=None, lo=None, hi=None,
                 check=True):
        ranks = dict((int(d), int(r)) for d, r in ranks.items() if r)
        if lo is None:
            lo = min(ranks, default=0)
        if hi is None:
            hi = max(ranks, default=lo - 1)

        outside = [d for d in ranks if not lo <= d <= hi]
        if outside:
            raise InvalidComplex('Degrees {0} lie outside {1}..{2}.'
                                 .format(sorted(outside), lo, hi))

        self.ring = ring
        self.lo = lo
        self.hi = hi
        self.ranks = ranks
        self.differentials = {}

        for d, matrix in (differentials or {}).items():
            d = int(d)
            if matrix.ring != ring:
                raise RingMismatch('Differential {0} lives in another ring.'
                                   .format(d))
            shape = (self.rank(d + 1), self.rank(d))
            if matrix.shape != shape:
                raise InvalidComplex('Differential {0} has shape {1}, expected '
                                     '{2}.'.format(d, matrix.shape, shape))
            if not matrix.is_zero():
                self.differentials[d] = matrix

        if check:
            for d in range(lo, hi - 1):
                if d in self.differentials and d + 1 in self.differentials:
                    square = self.differentials[d + 1] * self.differentials[d]
                    if not square.is_zero():
                        raise InvalidComplex('Differentials {0} and {1} do '
                                             'not compose to zero.'
                                             .format(d, d + 1))

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def free_module(cls, ring, rank, degree=0):
        """ Return free module of given rank placed in a single degree. """
        return cls(ring, {degree: rank}, lo=degree, hi=degree)

    def rank(self, degree):
        return self.ranks.get(degree, 0)

    def differential(self, degree):
        """ Return differential leaving `degree`, a zero matrix if none was
        stored.
        """
        try:
            return self.differentials[degree]
        except KeyError:
            return PolyMatrix.zero(self.ring, self.rank(degree + 1),
                                   self.rank(degree))

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def is_zero_complex(self):
        return not self.ranks

    def cohomology_module(self, i):
        return _cohomology(self.ring, self.rank(i), self.differential(i),
                           PolyMatrix.zero(self.ring, self.rank(i + 1), 0),
                           self.differential(i - 1))

    def __eq__(self, other):
        return isinstance(other, FreeComplex) and \
            self.ring == other.ring and self.ranks == other.ranks and \
            self.differentials == other.differentials

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'FreeComplex({0}..{1}, ranks={2})'.format(
            self.lo, self.hi, [self.rank(d) for d in self.degrees()])


class ModuleComplex(object):
    """ Bounded complex of finitely presented modules.

    :param ring: The ring.
    :param modules: Dict mapping degree to :class:`FPModule`.
    :param maps: Dict mapping degree `d` to a :class:`PolyMatrix` that sends
        the generators of ``modules[d]`` to ``modules[d + 1]``.
    :param lo: Lowest degree.
    :param hi: Highest degree.
    :param check: Verify that maps are well defined and compose to zero.
    """
    def __init__(self, ring, modules, maps=None, lo=None, hi=None,
                 check=True):
        modules = dict((d, m) for d, m in modules.items() if m.n_generators)
        self.ring = ring
        self.lo = min(modules, default=0) if lo is None else lo
        self.hi = max(modules, default=self.lo - 1) if hi is None else hi
        self.modules = modules
        self.maps = dict((d, m) for d, m in (maps or {}).items()
                         if not m.is_zero())

        for d, matrix in self.maps.items():
            shape = (self.module(d + 1).n_generators,
                     self.module(d).n_generators)
            if matrix.shape != shape:
                raise InvalidComplex('Map {0} has shape {1}, expected {2}.'
                                     .format(d, matrix.shape, shape))

        if check:
            self._check()

    def _check(self):
        for d in range(self.lo, self.hi):
            target = self.module(d + 1)
            image = self.map(d) * self.module(d).relations
            if not all(target.contains_relation(c) for c in image.columns()):
                raise InvalidComplex('Map {0} does not respect relations.'
                                     .format(d))

            square = self.map(d + 1) * self.map(d)
            beyond = self.module(d + 2)
            if not all(beyond.contains_relation(c)
                       for c in square.columns()):
                raise InvalidComplex('Maps {0} and {1} do not compose to '
                                     'zero.'.format(d, d + 1))

    @classmethod
    def from_free(cls, complex_):
        ring = complex_.ring
        modules = dict((d, FPModule.free(ring, complex_.rank(d)))
                       for d in complex_.degrees())
        return cls(ring, modules, dict(complex_.differentials),
                   complex_.lo, complex_.hi, check=False)

    def module(self, degree):
        return self.modules.get(degree) or FPModule(self.ring, 0)

    def map(self, degree):
        try:
            return self.maps[degree]
        except KeyError:
            return PolyMatrix.zero(self.ring,
                                   self.module(degree + 1).n_generators,
                                   self.module(degree).n_generators)

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def cohomology_module(self, i):
        module = self.module(i)
        incoming = module.relations.hstack(self.map(i - 1))
        return _cohomology(self.ring, module.n_generators, self.map(i),
                           self.module(i + 1).relations, incoming)

    def __repr__(self):
        return 'ModuleComplex({0}..{1}, generators={2})'.format(
            self.lo, self.hi,
            [self.module(d).n_generators for d in self.degrees()])


class ChainMap(object):
    """ Morphism of free complexes, one matrix per degree.

    :param source: :class:`FreeComplex`.
    :param target: :class:`FreeComplex` over the same ring.
    :param matrices: Dict mapping degree to matrix with
        ``target.rank(d)`` rows and ``source.rank(d)`` columns.
    :raises NotAChainMap: When the matrices do not commute with the
        differentials.
    """
    def __init__(self, source, target, matrices, check=True):
        if source.ring != target.ring:
            raise RingMismatch('Source and target live in different rings.')

        self.source = source
        self.target = target
        self.matrices = {}
        for d, matrix in matrices.items():
            shape = (target.rank(d), source.rank(d))
            if matrix.shape != shape:
                raise NotAChainMap('Component {0} has shape {1}, expected '
                                   '{2}.'.format(d, matrix.shape, shape))
            self.matrices[d] = matrix

        if check:
            lo = min(source.lo, target.lo) - 1
            hi = max(source.hi, target.hi)
            for d in range(lo, hi + 1):
                left = target.differential(d) * self.matrix(d)
                right = self.matrix(d + 1) * source.differential(d)
                if left != right:
                    raise NotAChainMap('Component {0} does not commute with '
                                       'the differentials.'.format(d))

    def matrix(self, degree):
        try:
            return self.matrices[degree]
        except KeyError:
            return PolyMatrix.zero(self.source.ring, self.target.rank(degree),
                                   self.source.rank(degree))


ProfileEntry = namedtuple('ProfileEntry', ['degree', 'ideal', 'codim'])


class SupportProfile(object):
    """ Support ideal and codimension of every cohomology module. """
    def __init__(self, entries):
        self.entries = list(entries)

    def codim(self, degree):
        for entry in self.entries:
            if entry.degree == degree:
                return entry.codim
        return INF

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return 'SupportProfile({0})'.format(
            dict((e.degree, e.codim) for e in self.entries))


def _cohomology(ring, n, outgoing, target_relations, incoming):
    """ Return ``ker(outgoing mod target_relations) / im(incoming)`` on
    ``R^n``.
    """
    if n == 0:
        return FPModule(ring, 0)

    if outgoing.rows == 0 or outgoing.is_zero():
        kernel = PolyMatrix.identity(ring, n)
    else:
        syz = syzygies(outgoing.hstack(target_relations))
        kernel = syz.submatrix(range(n), range(syz.cols))
        columns = [c for c in kernel.columns()
                   if any(not e.is_zero() for e in c)]
        kernel = PolyMatrix.from_columns(ring, n, columns)

    return subquotient(kernel, incoming)


def cohomology_module(complex_, i):
    """ Return presentation of the i-th cohomology module.

    :param complex_: :class:`FreeComplex` or :class:`ModuleComplex`.
    :param i: Degree.
    :return: :class:`FPModule`, with no generators when the cohomology
        vanishes.
    """
    module = complex_.cohomology_module(i)
    if module.n_generators and module.is_zero():
        return FPModule(complex_.ring, 0)
    return module


def _point_values(point, num_vars):
    values = tuple(to_fraction(v) for v in point)
    if len(values) != num_vars:
        raise ValueError('Point has {0} coordinates, ring has {1} variables.'
                         .format(len(values), num_vars))
    if any(v == 0 for v in values):
        raise ZeroValue('Coordinates of a character must be non-zero.')
    return values


def derived_fiber(complex_, point):
    """ Return dimensions of the cohomology of the complex tensored with the
    residue field at a point.

    :param complex_: :class:`FreeComplex`.
    :param point: :class:`charloci.torus.CharacterPoint` or sequence of
        non-zero rationals.
    :return: Dict mapping each degree to a dimension.
    :raises ZeroValue: When a coordinate is zero.
    """
    values = _point_values(point, complex_.ring.num_vars)

    def evaluated_rank(d):
        matrix = complex_.differential(d)
        return rational_rank(matrix.evaluate(values), matrix.rows,
                             matrix.cols)

    degrees = list(range(complex_.lo - 1, complex_.hi + 1))
    ranks = dict(zip(degrees, parallel_map(evaluated_rank, degrees)))
    return dict((d, complex_.rank(d) - ranks[d] - ranks[d - 1])
                for d in complex_.degrees())


def _sign(exponent):
    return -1 if exponent % 2 else 1


def dual(complex_):
    """ Return ``Hom(complex_, R)``.

    The term in degree ``-d`` has rank ``ranks[d]``; the differential leaving
    ``-d - 1`` is the transpose of ``d^d`` times ``(-1)^(d(d+1)/2)``, so that
    applying :func:`dual` twice gives back the same complex.
    """
    ranks = dict((-d, r) for d, r in complex_.ranks.items())
    differentials = dict(
        (-d - 1, matrix.transpose().scale(_sign(d * (d + 1) // 2)))
        for d, matrix in complex_.differentials.items())
    return FreeComplex(complex_.ring, ranks, differentials,
                       -complex_.hi, -complex_.lo, check=False)


def shift(complex_, s):
    """ Return ``complex_[s]``: degree `d` holds the term of degree
    ``d + s`` and differentials are multiplied by ``(-1)^s``.
    """
    ranks = dict((d - s, r) for d, r in complex_.ranks.items())
    differentials = dict((d - s, m.scale(_sign(s)))
                         for d, m in complex_.differentials.items())
    return FreeComplex(complex_.ring, ranks, differentials,
                       complex_.lo - s, complex_.hi - s, check=False)


def direct_sum(first, second):
    if first.ring != second.ring:
        raise RingMismatch('Complexes live in different rings.')

    degrees = set(first.ranks) | set(second.ranks)
    ranks = dict((d, first.rank(d) + second.rank(d)) for d in degrees)
    differentials = {}
    for d in degrees:
        blocks = [first.differential(d), second.differential(d)]
        differentials[d] = PolyMatrix.diagonal_blocks(blocks)
    return FreeComplex(first.ring, ranks, differentials, check=False)


def cone(chain_map):
    """ Return mapping cone of a :class:`ChainMap` ``phi: C -> D``.

    ``Cone^i = C^(i+1) + D^i`` with differential ``[[-d_C, 0], [phi, d_D]]``.
    """
    source, target = chain_map.source, chain_map.target
    ring = source.ring
    degrees = set(d - 1 for d in source.ranks) | set(target.ranks)
    ranks = dict((d, source.rank(d + 1) + target.rank(d)) for d in degrees)

    differentials = {}
    for d in degrees:
        top = (-source.differential(d + 1)).hstack(
            PolyMatrix.zero(ring, source.rank(d + 2), target.rank(d)))
        bottom = chain_map.matrix(d + 1).hstack(target.differential(d))
        differentials[d] = top.vstack(bottom)

    return FreeComplex(ring, ranks, differentials)


def _scale_variables(p, values):
    terms = {}
    for exp, coef in p.terms.items():
        for v, e in zip(values, exp):
            if e:
                coef *= v ** e
        terms[exp] = coef
    return Poly(p.ring, terms)


def twist(complex_, point):
    """ Return complex with every variable ``x_i`` replaced by
    ``point_i * x_i``.
    """
    values = _point_values(point, complex_.ring.num_vars)
    differentials = dict(
        (d, m.map_entries(lambda p: _scale_variables(p, values)))
        for d, m in complex_.differentials.items())
    return FreeComplex(complex_.ring, complex_.ranks, differentials,
                       complex_.lo, complex_.hi, check=False)


def _invert_matrix(matrix):
    n = matrix.ring.num_vars
    clearing = [0] * n
    for row in matrix.entries:
        for p in row:
            for exp in p.terms:
                clearing = [max(c, e) for c, e in zip(clearing, exp)]

    def invert(p):
        return Poly(p.ring, dict((tuple(c - e for c, e in zip(clearing, exp)),
                                  coef) for exp, coef in p.terms.items()))

    return matrix.map_entries(invert)


def invert_coords(complex_):
    """ Return complex with ``x_i`` replaced by ``1 / x_i``, each differential
    multiplied by the smallest monomial that clears denominators.

    The result agrees with the inverse image of `complex_` over the torus,
    where the clearing monomials are units.
    """
    differentials = dict((d, _invert_matrix(m))
                         for d, m in complex_.differentials.items())
    return FreeComplex(complex_.ring, complex_.ranks, differentials,
                       complex_.lo, complex_.hi, check=False)


def euler_characteristic(complex_):
    return sum(_sign(d) * r for d, r in complex_.ranks.items())


def support_profile(complex_, torus=None):
    """ Return :class:`SupportProfile` with one entry per degree.

    :param complex_: :class:`FreeComplex`.
    :param torus: Optional :class:`charloci.torus.CharacterTorus`; support
        ideals are then saturated at the coordinate units.
    """
    ring = complex_.ring

    def entry(d):
        module = cohomology_module(complex_, d)
        if module.n_generators == 0:
            return ProfileEntry(d, Ideal.unit(ring), INF)

        ideal = module.support_ideal()
        if torus is not None:
            ideal = torus.saturate_at_units(ideal)
        return ProfileEntry(d, ideal, codimension(ideal))

    return SupportProfile(parallel_map(entry, complex_.degrees()))


def amplitude(complex_):
    """ Return tuple (lowest, highest) degree with nonzero cohomology, or
    None for an acyclic complex.
    """
    degrees = [d for d in complex_.degrees()
               if cohomology_module(complex_, d).n_generators]
    if not degrees:
        return None
    return min(degrees), max(degrees)


def cohomology_agrees(first, second):
    """ Whether both complexes have isomorphic cohomology in every degree,
    as decided by :func:`charloci.algebra.modules.isomorphic`.
    """
    lo = min(first.lo, second.lo)
    hi = max(first.hi, second.hi)
    for d in range(lo, hi + 1):
        if not isomorphic(cohomology_module(first, d),
                          cohomology_module(second, d)):
            log.debug('Cohomology differs in degree {0}.'.format(d))
            return False
    return True


def _find_unit(matrices):
    for d in sorted(matrices):
        for i, row in enumerate(matrices[d]):
            for j, entry in enumerate(row):
                if entry.terms and entry.is_constant():
                    return d, i, j
    return None


def pruned(complex_):
    """ Return homotopy equivalent complex without constant entries in its
    differentials, by repeatedly cancelling a unit entry.
    """
    ring = complex_.ring
    ranks = dict((d, complex_.rank(d))
                 for d in range(complex_.lo, complex_.hi + 2))
    matrices = dict((d, [list(row) for row in complex_.differential(d).entries])
                    for d in range(complex_.lo, complex_.hi))

    while True:
        found = _find_unit(matrices)
        if found is None:
            break

        d, i, j = found
        rows = matrices[d]
        inverse = 1 / rows[i][j].constant_value()
        pivot_row = rows[i]
        reduced = []
        for a, row in enumerate(rows):
            if a == i:
                continue
            factor = row[j] * inverse
            new_row = []
            for b, e in enumerate(row):
                if b == j:
                    continue
                if factor.terms and pivot_row[b].terms:
                    e = e - factor * pivot_row[b]
                new_row.append(e)
            reduced.append(new_row)

        matrices[d] = reduced
        if d - 1 in matrices:
            matrices[d - 1] = [row for a, row in enumerate(matrices[d - 1])
                               if a != j]
        if d + 1 in matrices:
            matrices[d + 1] = [[e for b, e in enumerate(row) if b != i]
                               for row in matrices[d + 1]]
        ranks[d] -= 1
        ranks[d + 1] -= 1

    differentials = dict(
        (d, PolyMatrix(ring, ranks[d + 1], ranks[d], rows))
        for d, rows in matrices.items())
    return FreeComplex(ring, ranks, differentials, check=False)


def _cone_cycles(complex_, ranks, differentials, comparison, i):
    """ Return generators of the cycles in degree `i` of the cone of the
    comparison map from the partial free complex to `complex_`, modulo
    boundaries coming from `complex_` itself.

    Every generator is a column ``(p, m)`` with `p` in the free term of
    degree ``i + 1`` and `m` a generator combination of degree `i`.
    """
    ring = complex_.ring
    p1, p2 = ranks.get(i + 1, 0), ranks.get(i + 2, 0)
    module, following = complex_.module(i), complex_.module(i + 1)
    n, n1 = module.n_generators, following.n_generators
    size = p1 + n
    if size == 0:
        return []

    relations = following.relations
    top = (differentials.get(i + 1) or PolyMatrix.zero(ring, p2, p1)).hstack(
        PolyMatrix.zero(ring, p2, n),
        PolyMatrix.zero(ring, p2, relations.cols))
    bottom = (comparison.get(i + 1) or PolyMatrix.zero(ring, n1, p1)).hstack(
        complex_.map(i), relations)
    syz = syzygies(top.vstack(bottom), minimize=False)
    cycles = [col[:size] for col in syz.columns()]

    zeros = [Poly.zero(ring)] * p1
    boundaries = module.relations.hstack(complex_.map(i - 1))
    ambient = [zeros + col for col in boundaries.columns()]
    return minimal_generators(ring, size, cycles, ambient)


def free_replacement(complex_, max_length=None):
    """ Return :class:`FreeComplex` quasi-isomorphic to a bounded complex of
    modules.

    The free complex ``P`` is built from the top degree down together with
    a comparison map ``f: P -> complex_``. In every degree new generators
    kill the cycles of the cone of `f`: a cycle ``(p, m)`` becomes a
    generator `q` with ``d q = p`` and ``f q = -m``. Below the lowest degree
    this continues as a free resolution until no cycles remain. Unit entries
    are cancelled at the end.

    :param complex_: :class:`ModuleComplex`; a :class:`FreeComplex` is
        returned unchanged.
    :param max_length: Maximal number of degrees, default the length of the
        input plus number of variables plus 1.
    :raises ResolutionTooLong: When more degrees are needed.
    """
    if isinstance(complex_, FreeComplex):
        return complex_

    ring = complex_.ring
    lo, hi = complex_.lo, complex_.hi
    if hi < lo:
        return FreeComplex.zero(ring)

    if all(complex_.module(d).is_free_presentation()
           for d in complex_.degrees()):
        ranks = dict((d, complex_.module(d).n_generators)
                     for d in complex_.degrees())
        return pruned(FreeComplex(ring, ranks, complex_.maps, lo, hi))

    if max_length is None:
        max_length = (hi - lo + 1) + ring.num_vars + 1

    top = complex_.module(hi).n_generators
    ranks = {hi: top}
    differentials = {}
    comparison = {hi: PolyMatrix.identity(ring, top)}

    i = hi - 1
    while True:
        columns = _cone_cycles(complex_, ranks, differentials, comparison, i)
        if not columns and i < lo:
            break
        if hi - i >= max_length:
            raise ResolutionTooLong('Free replacement needs more than {0} '
                                    'degrees.'.format(max_length))

        p1 = ranks.get(i + 1, 0)
        n = complex_.module(i).n_generators
        ranks[i] = len(columns)
        differentials[i] = PolyMatrix.from_columns(
            ring, p1, [col[:p1] for col in columns])
        comparison[i] = PolyMatrix.from_columns(
            ring, n, [[-e for e in col[p1:]] for col in columns])
        i -= 1

    log.debug('Free replacement of {0!r} spans degrees {1}..{2}.'
              .format(complex_, i + 1, hi))
    return pruned(FreeComplex(ring, ranks, differentials, i + 1, hi))


def truncate_leq(complex_, n):
    """ Return free model of the canonical truncation ``tau_{<=n}``, which
    keeps cohomology in degrees up to `n`.
    """
    ring = complex_.ring
    if n >= complex_.hi:
        return complex_
    if n < complex_.lo:
        return FreeComplex.zero(ring)

    outgoing = complex_.differential(n)
    if outgoing.is_zero():
        ranks = dict((d, complex_.rank(d)) for d in range(complex_.lo, n + 1))
        differentials = dict((d, complex_.differential(d))
                             for d in range(complex_.lo, n))
        return FreeComplex(ring, ranks, differentials, check=False)

    kernel = syzygies(outgoing)
    k = kernel.cols
    cycles = FPModule(ring, k, syzygies(kernel) if k
                      else PolyMatrix.zero(ring, 0, 0))

    incoming = complex_.differential(n - 1)
    lifted = []
    for column in incoming.columns():
        coefficients = lift(column, kernel)
        if coefficients is None:
            raise InvalidComplex('Boundaries in degree {0} are not cycles.'
                                 .format(n))
        lifted.append(coefficients)

    modules = dict((d, FPModule.free(ring, complex_.rank(d)))
                   for d in range(complex_.lo, n))
    modules[n] = cycles
    maps = dict((d, complex_.differential(d))
                for d in range(complex_.lo, n - 1))
    maps[n - 1] = PolyMatrix.from_columns(ring, k, lifted)
    return free_replacement(ModuleComplex(ring, modules, maps, complex_.lo,
                                          n, check=False))


def truncate_geq(complex_, n):
    """ Return free model of the canonical truncation ``tau_{>=n}``, which
    keeps cohomology in degrees from `n` on.
    """
    ring = complex_.ring
    if n <= complex_.lo:
        return complex_
    if n > complex_.hi:
        return FreeComplex.zero(ring)

    modules = dict((d, FPModule.free(ring, complex_.rank(d)))
                   for d in range(n + 1, complex_.hi + 1))
    modules[n] = FPModule(ring, complex_.rank(n), complex_.differential(n - 1))
    maps = dict((d, complex_.differential(d)) for d in range(n, complex_.hi))
    return free_replacement(ModuleComplex(ring, modules, maps, n, complex_.hi,
                                          check=False))


def koszul_complex(ring, operators, lo=0, size=1):
    """ Return Koszul complex of commuting square matrices ``T_1 .. T_a``
    acting on ``R^v``.

    The term in degree ``lo + p`` is ``wedge^p R^a (x) R^v`` with basis
    ``e_S (x) u`` for subsets `S` of size `p` in lexicographic order, and
    ``d(e_S (x) u) = sum over j not in S of (-1)^#{i in S: i < j}
    e_(S+j) (x) T_j u``.

    :param ring: The ring.
    :param operators: List with square :class:`PolyMatrix`, or :class:`Poly`
        for the rank 1 case.
    :param lo: Degree of the first term.
    :param size: Rank `v` when there are no operators.
    """
    operators = [PolyMatrix(ring, 1, 1, [[t]]) if isinstance(t, Poly) else t
                 for t in operators]
    v = operators[0].rows if operators else size

    ranks = {}
    differentials = {}
    for p, (n_source, n_target, pattern) in \
            enumerate(koszul_pattern(len(operators))):
        ranks[lo + p] = n_source * v
        entries = [[Poly.zero(ring)] * (n_source * v)
                   for _ in range(n_target * v)]
        for row, col, j, sign in pattern:
            block = operators[j].entries
            for r in range(v):
                for c in range(v):
                    if block[r][c].terms:
                        entries[row * v + r][col * v + c] = block[r][c] * sign
        differentials[lo + p] = PolyMatrix(ring, n_target * v, n_source * v,
                                           entries)
    ranks[lo + len(operators)] = v

    return FreeComplex(ring, ranks, differentials, lo, lo + len(operators))


def koszul_pattern(a):
    """ Return the sign pattern of the Koszul differentials on `a`
    operators.

    :return: List with one tuple ``(n_source, n_target, entries)`` per
        degree ``p < a``; `entries` holds tuples ``(row, col, j, sign)``
        meaning ``sign * T_j`` sits at block position (row, col).
    """
    subsets = [list(combinations(range(a), p)) for p in range(a + 1)]
    result = []
    for p in range(a):
        index = dict((s, k) for k, s in enumerate(subsets[p + 1]))
        entries = []
        for col, s in enumerate(subsets[p]):
            for j in range(a):
                if j not in s:
                    row = index[tuple(sorted(s + (j,)))]
                    entries.append((row, col, j,
                                    _sign(sum(1 for i in s if i < j))))
        result.append((len(subsets[p]), len(subsets[p + 1]), entries))
    return result
