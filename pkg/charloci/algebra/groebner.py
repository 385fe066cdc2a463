"""
Gröbner bases of ideals and of submodules of free modules.

Elements of a free module ``R^r`` are stored as dicts mapping terms
``(position, exponent)`` to rational coefficients; an ideal is the rank 1
case. Terms are ordered by a :class:`TermOrder`: positions are grouped in
blocks, a term in a lower block is always larger, and within a block terms
are compared by monomial first and by position second (lower position is
larger). With a single block this is the usual term-over-position order;
with the top positions in block 0 and auxiliary positions in block 1 it
eliminates the top positions, which is how syzygies and lifts are computed.

Buchberger's algorithm uses the normal selection strategy (smallest lcm
first, ties broken by pair index) so results are reproducible, Buchberger's
chain criterion, and the coprime criterion for ideals. Returned bases are
reduced, monic and sorted from largest to smallest leading term.
"""
from fractions import Fraction

from charloci import log
from charloci.algebra.poly import Poly
from charloci.algebra.matrix import PolyMatrix
from charloci.exceptions import RingMismatch
from charloci.utils import memoize


class TermOrder(object):
    """ Order on terms of the free module ``R^rank``.

    :param ring: :class:`PolyRing` providing the monomial order.
    :param rank: Rank of the free module.
    :param blocks: Optional tuple with a block number per position.
    """
    def __init__(self, ring, rank=1, blocks=None):
        blocks = tuple(blocks) if blocks is not None else (0,) * rank
        if len(blocks) != rank:
            raise ValueError('Need one block per position.')

        self.ring = ring
        self.rank = rank
        self.blocks = blocks
        mkey = ring.monomial_key

        def key(term):
            pos, exp = term
            return (-blocks[pos], mkey(exp), -pos)

        self.key = key

    def __eq__(self, other):
        return isinstance(other, TermOrder) and \
            (self.ring, self.rank, self.blocks) == \
            (other.ring, other.rank, other.blocks)

    def __hash__(self):
        return hash((self.ring, self.rank, self.blocks))


class _Element(object):
    __slots__ = ('lt', 'lc', 'vector')

    def __init__(self, vector, key):
        lt = max(vector, key=key)
        lc = vector[lt]
        if lc != 1:
            vector = dict((t, c / lc) for t, c in vector.items())
        self.lt = lt
        self.lc = Fraction(1)
        self.vector = vector


def _divides(small, big):
    return small[0] == big[0] and \
        all(a <= b for a, b in zip(small[1], big[1]))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _add_multiple(target, vector, shift, factor):
    """ target -= factor * x^shift * vector, in place. """
    for (pos, exp), coef in vector.items():
        term = (pos, tuple(a + b for a, b in zip(exp, shift)))
        value = target.get(term, 0) - factor * coef
        if value:
            target[term] = value
        else:
            target.pop(term, None)


def reduce_vector(vector, elements, key):
    """ Return remainder of full division of `vector` by `elements`.

    :param vector: Dict term -> coefficient.
    :param elements: List of :class:`_Element`.
    :param key: Term order key.
    :return: Dict with remainder, no term divisible by a leading term.
    """
    rest = dict(vector)
    remainder = {}
    while rest:
        lt = max(rest, key=key)
        coef = rest[lt]
        for g in elements:
            if _divides(g.lt, lt):
                shift = tuple(a - b for a, b in zip(lt[1], g.lt[1]))
                _add_multiple(rest, g.vector, shift, coef / g.lc)
                break
        else:
            remainder[lt] = coef
            del rest[lt]
    return remainder


def _s_vector(f, g):
    lcm = _lcm(f.lt[1], g.lt[1])
    s = {}
    _add_multiple(s, f.vector, tuple(a - b for a, b in zip(lcm, f.lt[1])),
                  Fraction(-1) / f.lc)
    _add_multiple(s, g.vector, tuple(a - b for a, b in zip(lcm, g.lt[1])),
                  Fraction(1) / g.lc)
    return s


def buchberger(vectors, order, known=0):
    """ Return reduced Gröbner basis of the submodule generated by vectors.

    :param vectors: List of dicts term -> coefficient.
    :param order: :class:`TermOrder`.
    :param known: The first `known` vectors already form a Gröbner basis;
        pairs among them are not considered.
    :return: List of :class:`_Element`, largest leading term first.
    """
    key = order.key
    coprime_criterion = order.rank == 1
    basis = []
    pending = set()

    def pair_key(pair):
        i, j = pair
        lcm = _lcm(basis[i].lt[1], basis[j].lt[1])
        return (order.ring.monomial_key(lcm), -basis[i].lt[0], j, i)

    def add(vector, with_pairs=True):
        element = _Element(vector, key)
        index = len(basis)
        basis.append(element)
        if with_pairs:
            for i in range(index):
                if basis[i].lt[0] == element.lt[0]:
                    pending.add((i, index))

    for i, vector in enumerate(vectors):
        if not vector:
            continue
        if i < known:
            add(vector, with_pairs=False)
            continue
        remainder = reduce_vector(vector, basis, key)
        if remainder:
            add(remainder)

    steps = 0
    while pending:
        pair = min(pending, key=pair_key)
        pending.discard(pair)
        i, j = pair
        f, g = basis[i], basis[j]
        lcm = _lcm(f.lt[1], g.lt[1])

        if coprime_criterion and \
                all(a == 0 or b == 0 for a, b in zip(f.lt[1], g.lt[1])):
            continue

        if _chain_criterion(basis, pending, i, j, lcm):
            continue

        steps += 1
        remainder = reduce_vector(_s_vector(f, g), basis, key)
        if remainder:
            add(remainder)

    log.debug('Buchberger finished after {0} reductions with {1} elements '
              'in rank {2}.'.format(steps, len(basis), order.rank))
    return _interreduce(basis, key)


def _chain_criterion(basis, pending, i, j, lcm):
    position = basis[i].lt[0]
    for k, h in enumerate(basis):
        if k in (i, j) or h.lt[0] != position:
            continue
        if not all(a <= b for a, b in zip(h.lt[1], lcm)):
            continue
        if (min(i, k), max(i, k)) in pending or \
                (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _interreduce(basis, key):
    basis = sorted(basis, key=lambda e: key(e.lt))
    minimal = []
    for element in basis:
        if not any(_divides(m.lt, element.lt) for m in minimal):
            minimal.append(element)

    reduced = []
    for idx, element in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = dict(element.vector)
        lead = tail.pop(element.lt)
        tail = reduce_vector(tail, others, key)
        tail[element.lt] = lead
        reduced.append(_Element(tail, key))

    reduced.sort(key=lambda e: key(e.lt), reverse=True)
    return reduced


def column_to_vector(column):
    """ Convert list of :class:`Poly` to dict term -> coefficient. """
    vector = {}
    for pos, entry in enumerate(column):
        for exp, coef in entry.terms.items():
            vector[(pos, exp)] = coef
    return vector


def vector_to_column(vector, ring, rank, offset=0):
    """ Convert dict term -> coefficient back to list of `rank` polys.

    :param offset: Position that becomes the first entry.
    """
    parts = [dict() for _ in range(rank)]
    for (pos, exp), coef in vector.items():
        index = pos - offset
        if 0 <= index < rank:
            parts[index][exp] = coef
    return [Poly(ring, p) for p in parts]


def _freeze(vector):
    return tuple(sorted(vector.items()))


@memoize
def _cached_basis(order, frozen_vectors):
    return buchberger([dict(v) for v in frozen_vectors], order)


class GroebnerBasis(object):
    """ Reduced Gröbner basis of a submodule of ``R^rank``.

    Instances are created with :func:`groebner_basis` and
    :func:`module_groebner_basis`.
    """
    def __init__(self, order, elements):
        self.order = order
        self.ring = order.ring
        self.rank = order.rank
        self.elements = list(elements)

    @classmethod
    def from_vectors(cls, order, vectors):
        frozen = tuple(_freeze(v) for v in vectors if v)
        return cls(order, _cached_basis(order, frozen))

    def extend(self, vectors):
        """ Return basis of the submodule with `vectors` added. """
        known = [e.vector for e in self.elements]
        return GroebnerBasis(self.order,
                             buchberger(known + list(vectors), self.order,
                                        known=len(known)))

    def __len__(self):
        return len(self.elements)

    def reduce(self, vector):
        return reduce_vector(vector, self.elements, self.order.key)

    def contains(self, vector):
        return not self.reduce(vector)

    def leading_terms(self):
        return [e.lt for e in self.elements]

    def is_unit(self):
        """ Whether the rank 1 basis contains a non-zero constant. """
        return any(not any(e.lt[1]) for e in self.elements)

    def vectors(self):
        return [dict(e.vector) for e in self.elements]

    def polys(self):
        """ Return basis as list of :class:`Poly` (rank 1 only). """
        return [Poly(self.ring, dict((exp, c) for (_, exp), c in
                                     e.vector.items()))
                for e in self.elements]

    def columns(self):
        return [vector_to_column(e.vector, self.ring, self.rank)
                for e in self.elements]

    def satisfies_buchberger_criterion(self):
        """ Return True if every S-vector reduces to zero. """
        key = self.order.key
        for i, f in enumerate(self.elements):
            for g in self.elements[i + 1:]:
                if f.lt[0] != g.lt[0]:
                    continue
                if reduce_vector(_s_vector(f, g), self.elements, key):
                    return False
        return True


def groebner_basis(gens, order=None):
    """ Return reduced Gröbner basis of the ideal generated by polynomials.

        >>> ring = PolyRing(['x', 'y'], 'lex')
        >>> groebner_basis([parse_poly('x - 1', ring),
        ...                 parse_poly('y - 1', ring)])
        [Poly('x - 1'), Poly('y - 1')]

    :param gens: List of :class:`Poly` in one ring.
    :param order: Optional monomial order; the polynomials are then read in
        the same ring with this order.
    :return: List of monic :class:`Poly`, largest leading term first.
    """
    gens = list(gens)
    if not gens:
        return []

    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch('Generators live in different rings.')

    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        gens = [Poly(ring, g.terms) for g in gens]

    basis = ideal_basis(ring, gens)
    return basis.polys()


def ideal_basis(ring, gens):
    """ Return :class:`GroebnerBasis` of the ideal generated by `gens`. """
    vectors = [dict(((0, e), c) for e, c in g.terms.items()) for g in gens]
    return GroebnerBasis.from_vectors(TermOrder(ring), vectors)


def module_groebner_basis(matrix, blocks=None):
    """ Return :class:`GroebnerBasis` of the submodule generated by the
    columns of a :class:`PolyMatrix`.

    :param matrix: Generators as columns.
    :param blocks: Optional block number per row; see :class:`TermOrder`.
    """
    order = TermOrder(matrix.ring, matrix.rows, blocks)
    return GroebnerBasis.from_vectors(
        order, [column_to_vector(c) for c in matrix.columns()])


def normal_form(p, basis):
    """ Return remainder of `p` on division by a Gröbner basis.

    :param p: :class:`Poly`.
    :param basis: :class:`GroebnerBasis` or list of :class:`Poly` forming a
        Gröbner basis.
    :return: :class:`Poly`, zero iff `p` lies in the ideal.
    :raises RingMismatch: When `p` lives in another ring.
    """
    if not isinstance(basis, GroebnerBasis):
        basis = list(basis)
        for g in basis:
            if g.ring != p.ring:
                raise RingMismatch('Polynomial and basis live in different '
                                   'rings.')
        order = TermOrder(p.ring)
        elements = [_Element(dict(((0, e), c) for e, c in g.terms.items()),
                             order.key) for g in basis if not g.is_zero()]
        basis = GroebnerBasis(order, elements)
    elif basis.ring != p.ring:
        raise RingMismatch('Polynomial and basis live in different rings.')

    remainder = basis.reduce(dict(((0, e), c) for e, c in p.terms.items()))
    return Poly(p.ring, dict((exp, c) for (_, exp), c in remainder.items()))


def _tagged_basis(matrix):
    """ Gröbner basis of the columns ``(m_j; e_j)`` of ``R^(r + s)`` with the
    top `r` positions eliminated first.
    """
    ring, r, s = matrix.ring, matrix.rows, matrix.cols
    vectors = []
    for j, column in enumerate(matrix.columns()):
        vector = column_to_vector(column)
        vector[(r + j, ring.one_exponent)] = Fraction(1)
        vectors.append(vector)

    order = TermOrder(ring, r + s, (0,) * r + (1,) * s)
    return GroebnerBasis.from_vectors(order, vectors)


def syzygies(matrix, minimize=True):
    """ Return matrix whose columns generate the kernel of `matrix`.

    :param matrix: :class:`PolyMatrix` with `r` rows and `s` columns.
    :param minimize: Drop generators that are redundant.
    :return: :class:`PolyMatrix` with `s` rows; ``matrix * result == 0``.
    """
    ring, r, s = matrix.ring, matrix.rows, matrix.cols
    if s == 0:
        return PolyMatrix.zero(ring, 0, 0)

    if r == 0 or matrix.is_zero():
        return PolyMatrix.identity(ring, s)

    basis = _tagged_basis(matrix)
    columns = [vector_to_column(e.vector, ring, s, offset=r)
               for e in basis.elements if e.lt[0] >= r]

    if minimize:
        columns = minimal_generators(ring, s, columns)

    return PolyMatrix.from_columns(ring, s, columns)


def lift(column, matrix):
    """ Express `column` as combination of the columns of `matrix`.

    :param column: List of :class:`Poly` of length ``matrix.rows``.
    :param matrix: :class:`PolyMatrix`.
    :return: List of `matrix.cols` coefficients, or None when `column` is
        not in the submodule generated by the columns.
    """
    ring, r, s = matrix.ring, matrix.rows, matrix.cols
    vector = column_to_vector(column)
    if not vector:
        return [Poly.zero(ring)] * s

    if s == 0:
        return None

    basis = _tagged_basis(matrix)
    remainder = basis.reduce(vector)
    if any(pos < r for pos, _ in remainder):
        return None

    return [-c for c in vector_to_column(remainder, ring, s, offset=r)]


def minimal_generators(ring, rank, columns, ambient=None):
    """ Greedily drop generators already in the span of the others.

    Columns are visited by increasing degree and kept when they are not in
    the submodule generated by the kept columns and `ambient`.

    :param ring: The ring.
    :param rank: Length of the columns.
    :param columns: Candidate generators.
    :param ambient: Optional list of columns that are always present.
    :return: List with the kept columns.
    """
    order = TermOrder(ring, rank)
    ambient_vectors = [column_to_vector(c) for c in (ambient or [])]
    basis = GroebnerBasis.from_vectors(order, ambient_vectors)

    candidates = [c for c in columns if any(not e.is_zero() for e in c)]
    candidates = sorted(enumerate(candidates),
                        key=lambda ic: (max(e.degree() for e in ic[1]),
                                        ic[0]))
    kept = []
    for index, column in candidates:
        vector = column_to_vector(column)
        if basis.contains(vector):
            continue
        kept.append((index, column))
        basis = basis.extend([vector])

    return [column for _, column in sorted(kept, key=lambda ic: ic[0])]
