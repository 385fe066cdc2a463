"""
Finitely presented modules ``coker(A)`` over a polynomial ring.

A module with `n` generators and relation matrix `A` (`n` rows, one column
per relation) is the cokernel of ``A: R^m -> R^n``. Besides presentations
this module provides pruning, annihilators, Fitting ideals, generic rank,
Hom modules, the isomorphism test used throughout the package, and free
resolutions.
"""
from fractions import Fraction
from math import comb

from charloci import conf, log
from charloci.algebra.poly import Poly
from charloci.algebra.matrix import PolyMatrix, rational_rank
from charloci.algebra.ideal import Ideal, intersection, minors_ideal
from charloci.algebra.groebner import (module_groebner_basis, syzygies,
                                       column_to_vector, minimal_generators)
from charloci.exceptions import ResolutionTooLong, RingMismatch


class FPModule(object):
    """ Module presented as the cokernel of its relation matrix.

    :param ring: The ring.
    :param n_generators: Number of generators.
    :param relations: :class:`PolyMatrix` with `n_generators` rows. Omit for
        a free module.
    """
    def __init__(self, ring, n_generators, relations=None):
        if relations is None:
            relations = PolyMatrix.zero(ring, n_generators, 0)

        if relations.rows != n_generators:
            raise ValueError('Relation matrix needs {0} rows, not {1}.'
                             .format(n_generators, relations.rows))
        if relations.ring != ring:
            raise RingMismatch('Relations live in another ring.')

        self.ring = ring
        self.n_generators = n_generators
        self.relations = relations
        self._basis = None

    @classmethod
    def free(cls, ring, rank):
        return cls(ring, rank)

    @classmethod
    def cyclic(cls, ideal):
        """ Return ``R / ideal``. """
        gens = list(ideal.generators)
        return cls(ideal.ring, 1,
                   PolyMatrix(ideal.ring, 1, len(gens), [gens]))

    @property
    def relation_basis(self):
        """ Gröbner basis of the submodule generated by the relations. """
        if self._basis is None:
            self._basis = module_groebner_basis(self.relations)
        return self._basis

    def is_free_presentation(self):
        return self.relations.is_zero()

    def is_zero(self):
        if self.n_generators == 0:
            return True

        if self.is_free_presentation():
            return False

        one = Fraction(1)
        zero_exp = self.ring.one_exponent
        return all(self.relation_basis.contains({(i, zero_exp): one})
                   for i in range(self.n_generators))

    def contains_relation(self, column):
        """ Whether `column` is zero in the module. """
        return self.relation_basis.contains(column_to_vector(column))

    def pruned(self):
        """ Return equivalent presentation without unit relation entries.

        Whenever a relation has a non-zero constant entry, the corresponding
        generator is expressed through the others and removed together with
        that relation. Zero and duplicate relations are dropped afterwards.
        """
        rows = [list(r) for r in self.relations.entries]
        n, m = self.n_generators, self.relations.cols
        alive_rows = list(range(n))
        alive_cols = list(range(m))

        while True:
            pivot = None
            for i in alive_rows:
                for j in alive_cols:
                    entry = rows[i][j]
                    if entry.terms and entry.is_constant():
                        pivot = (i, j)
                        break
                if pivot:
                    break

            if pivot is None:
                break

            i, j = pivot
            c = rows[i][j].constant_value()
            alive_rows.remove(i)
            alive_cols.remove(j)
            for k in alive_rows:
                factor = rows[k][j]
                if factor.is_zero():
                    continue
                for l in alive_cols:
                    if rows[i][l].terms:
                        rows[k][l] = rows[k][l] - factor * rows[i][l] * (1 / c)

        columns = []
        seen = set()
        for j in alive_cols:
            column = tuple(rows[i][j] for i in alive_rows)
            if all(e.is_zero() for e in column) or column in seen:
                continue
            seen.add(column)
            columns.append(list(column))

        return FPModule(self.ring, len(alive_rows),
                        PolyMatrix.from_columns(self.ring, len(alive_rows),
                                                columns))

    def fitting_ideal(self, k=0):
        """ Return k-th Fitting ideal, generated by the minors of size
        ``n_generators - k`` of the relations.
        """
        size = self.n_generators - k
        if size <= 0:
            return Ideal.unit(self.ring)
        return minors_ideal(self.relations, size)

    def annihilator(self):
        """ Return annihilator, as the intersection over the generators e_j
        of the colon ideals ``(relations : e_j)``.
        """
        ring = self.ring
        if self.is_zero():
            return Ideal.unit(ring)
        if self.is_free_presentation():
            return Ideal.zero(ring)

        result = None
        n = self.n_generators
        for j in range(n):
            unit = [[1 if i == j else 0] for i in range(n)]
            extended = self.relations.hstack(PolyMatrix(ring, n, 1, unit))
            syz = syzygies(extended, minimize=False)
            colon = Ideal(ring, syz.row(syz.rows - 1))
            result = colon if result is None else intersection(result, colon)
        return result

    def presentation_degree(self):
        return max(self.relations.max_degree(), 0) * self.n_generators

    def support_ideal(self):
        """ Return ideal cutting out the support: the annihilator, or the
        0-th Fitting ideal when :attr:`Config.SUPPORT_CERTIFICATE` asks for
        it or the presentation exceeds the annihilator degree budget.
        """
        if conf.SUPPORT_CERTIFICATE == 'fitting' or \
                self.presentation_degree() > conf.ANNIHILATOR_DEGREE_BUDGET:
            return self.fitting_ideal(0)
        return self.annihilator()

    def generic_rank(self):
        """ Return rank over the fraction field of the ring. """
        return self.n_generators - matrix_rank_over_fractions(self.relations)

    def __repr__(self):
        return 'FPModule({0} generators, {1} relations)'.format(
            self.n_generators, self.relations.cols)


def matrix_rank_over_fractions(matrix):
    """ Return rank of a polynomial matrix over the field of rational
    functions, computed exactly by sympy.
    """
    if matrix.rows == 0 or matrix.cols == 0 or matrix.is_zero():
        return 0

    if not matrix.ring.num_vars:
        return rational_rank([[e.constant_value() for e in row]
                              for row in matrix.entries], *matrix.shape)

    from sympy import QQ, symbols
    from sympy.polys.matrices import DomainMatrix

    gens = symbols(' '.join(matrix.ring.var_names))
    if not isinstance(gens, tuple):
        gens = (gens,)
    field = QQ.frac_field(*gens)
    rows = [[field.from_sympy(e.as_sympy(gens)) for e in row]
            for row in matrix.entries]
    return DomainMatrix(rows, matrix.shape, field).rank()


def subquotient(generators, ambient):
    """ Return presentation of ``(im K + im D) / im D``.

    :param generators: :class:`PolyMatrix` K whose columns generate.
    :param ambient: :class:`PolyMatrix` D with the same number of rows.
    :return: Pruned :class:`FPModule` with one generator per column of K.
    """
    ring, k = generators.ring, generators.cols
    if k == 0:
        return FPModule(ring, 0)

    if ambient.cols == 0 or ambient.is_zero():
        relations = syzygies(generators)
    else:
        syz = syzygies(generators.hstack(ambient))
        relations = syz.submatrix(range(k), range(syz.cols))

    return FPModule(ring, k, relations).pruned()


def _kronecker_identity(matrix, p):
    """ Return ``matrix (x) I_p`` as block matrix. """
    ring = matrix.ring
    rows = matrix.rows * p
    cols = matrix.cols * p
    entries = [[0] * cols for _ in range(rows)]
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            for r in range(p):
                entries[i * p + r][j * p + r] = matrix.entries[i][j]
    return PolyMatrix(ring, rows, cols, entries)


def hom_module(source, target):
    """ Return presentation of ``Hom(source, target)``.

    A homomorphism is given by the images of the generators of `source` in
    `target`, subject to sending every relation of `source` to zero.
    """
    ring = source.ring
    n, a = source.n_generators, source.relations.cols
    p = target.n_generators
    if n == 0 or p == 0:
        return FPModule(ring, 0)

    relations = target.relations
    repeated_n = PolyMatrix.diagonal_blocks([relations] * n) \
        if relations.cols else PolyMatrix.zero(ring, p * n, 0)

    if a == 0:
        candidates = PolyMatrix.identity(ring, p * n)
    else:
        psi = _kronecker_identity(source.relations.transpose(), p)
        repeated_a = PolyMatrix.diagonal_blocks([relations] * a) \
            if relations.cols else PolyMatrix.zero(ring, p * a, 0)
        syz = syzygies(psi.hstack(repeated_a))
        candidates = syz.submatrix(range(p * n), range(syz.cols))

    return subquotient(candidates, repeated_n)


def dual_module(module):
    """ Return presentation of ``Hom(module, R)``. """
    return hom_module(module, FPModule.free(module.ring, 1))


def _minor_count(module):
    n, m = module.n_generators, module.relations.cols
    return sum(comb(n, t) * comb(m, t) for t in range(1, n + 1))


def isomorphic(first, second):
    """ Compare two modules through their invariants.

    Modules are declared isomorphic when their generic ranks agree and all
    Fitting ideals agree. If that needs more minors than
    :attr:`Config.ISOMORPHISM_MINORS_BUDGET`, annihilators are compared
    instead. Equal invariants are necessary for isomorphism; the converse is
    the surrogate used for all quasi-isomorphism claims.
    """
    first, second = first.pruned(), second.pruned()
    if first.is_zero() or second.is_zero():
        return first.is_zero() and second.is_zero()

    if first.generic_rank() != second.generic_rank():
        return False

    if _minor_count(first) + _minor_count(second) > \
            conf.ISOMORPHISM_MINORS_BUDGET:
        log.debug('Minor budget exceeded, comparing annihilators.')
        return first.annihilator() == second.annihilator()

    top = max(first.n_generators, second.n_generators)
    return all(first.fitting_ideal(k) == second.fitting_ideal(k)
               for k in range(top))


def free_resolution(module, max_length=None):
    """ Return free resolution ``F_L -> ... -> F_1 -> F_0`` of a module as a
    :class:`charloci.complexes.FreeComplex` in degrees ``-L .. 0``.

    :param module: :class:`FPModule`.
    :param max_length: Maximal length, default number of variables plus 1.
    :raises ResolutionTooLong: When the kernel at `max_length` is nonzero.
    """
    from charloci.complexes import FreeComplex

    ring = module.ring
    if max_length is None:
        max_length = ring.num_vars + 1
    if max_length < 1:
        raise ValueError('max_length must be at least 1.')

    module = module.pruned()
    n = module.n_generators
    columns = minimal_generators(ring, n, module.relations.columns())
    current = PolyMatrix.from_columns(ring, n, columns)

    ranks = {0: n}
    differentials = {}
    length = 0
    while current.cols:
        length += 1
        if length > max_length:
            raise ResolutionTooLong('Kernel still nonzero after {0} steps.'
                                    .format(max_length))
        ranks[-length] = current.cols
        differentials[-length] = current
        current = syzygies(current)

    log.debug('Resolution of {0!r} has length {1}.'.format(module, length))
    return FreeComplex(ring, ranks, differentials, lo=-length, hi=0)
