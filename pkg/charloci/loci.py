"""
Cohomology jump loci of free complexes over a character torus.

The locus ``S_m^k`` is the set of characters where the fiber of a complex
has cohomology of dimension at least `m` in degree `k`. With ``f = d^(k-1)``
and ``g = d^k`` it is the union over ``i >= 0`` of the sets where
``rank g <= b - m - i`` and ``rank f <= i``, so every component is cut out
by minors. Components are saturated at the coordinate units, so they
describe closed subsets of the torus.

Components are split by factoring until the pieces have binomial Gröbner
bases, which are read as translated subtori. Every decomposition is
certified by radical membership in both directions.
"""
import random
from collections import namedtuple
from fractions import Fraction
from itertools import chain

from sympy import integer_nthroot

from charloci import log
from charloci.algebra.ideal import (Ideal, INF, codimension, intersection,
                                    minors_ideal, radical_membership)
from charloci.algebra.poly import Poly
from charloci.complexes import derived_fiber, euler_characteristic
from charloci.torus import (CharacterPoint, TranslatedSubtorus,
                            smith_decomposition, subtorus_ideal,
                            torsion_check)
from charloci.exceptions import TorusMismatch
from charloci.utils import parallel_map


class JumpLocus(object):
    """ Union of closed subsets of a torus, given by one ideal each.

    :param torus: :class:`charloci.torus.CharacterTorus`.
    :param k: Degree.
    :param m: Multiplicity.
    :param components: List of proper :class:`Ideal` saturated at units.
    """
    def __init__(self, torus, k, m, components):
        self.torus = torus
        self.k = k
        self.m = m
        self.components = list(components)

    def contains(self, point):
        return locus_membership(point, self)

    def is_empty(self):
        return not self.components

    def is_everything(self):
        return any(c.is_zero() for c in self.components)

    def flatten(self):
        return flatten(self)

    def codim(self):
        return locus_codim(self)

    def __repr__(self):
        return 'JumpLocus(k={0}, m={1}, {2} component(s))'.format(
            self.k, self.m, len(self.components))


DecompositionReport = namedtuple('DecompositionReport',
                                 ['ideal', 'subtori', 'certified',
                                  'arithmetic'])

OracleReport = namedtuple('OracleReport',
                          ['k', 'm', 'seed', 'samples', 'mismatches'])


def _rank_condition(matrix, bound):
    """ Return ideal of the points where ``rank matrix <= bound``. """
    if bound < 0:
        return Ideal.unit(matrix.ring)
    return minors_ideal(matrix, bound + 1)


def jump_locus(complex_, k, m, torus):
    """ Return :class:`JumpLocus` of the characters where the fiber of
    `complex_` has cohomology of dimension at least `m` in degree `k`.
    """
    if m < 1:
        raise ValueError('Multiplicity must be 1 or larger, not {0}.'
                         .format(m))
    if complex_.ring != torus.ring:
        raise TorusMismatch('Complex does not live on {0!r}.'.format(torus))

    f, g = complex_.differential(k - 1), complex_.differential(k)
    a, b = complex_.rank(k - 1), complex_.rank(k)

    def component(i):
        ideal = _rank_condition(g, b - m - i) + _rank_condition(f, i)
        if ideal.is_unit():
            return None
        return torus.saturate_at_units(ideal)

    components = []
    for ideal in parallel_map(component, range(a + 1)):
        if ideal is None or ideal.is_unit() or ideal in components:
            continue
        components.append(ideal)

    log.debug('Locus S_{0}^{1} has {2} component(s).'.format(m, k,
                                                            len(components)))
    return JumpLocus(torus, k, m, components)


def locus_membership(point, locus):
    values = locus.torus.point(point).values
    return any(c.vanishes_at(values) for c in locus.components)


def sampled_oracle_check(complex_, k, m, torus, samples, seed, extra=()):
    """ Compare locus membership with fiber dimensions at sampled points.

    :param samples: Number of points, 1 or more.
    :param seed: Seed of the point generator.
    :param extra: Additional coordinates for the sampler, e.g. monodromy
        eigenvalues.
    :return: :class:`OracleReport`; `mismatches` lists tuples (point,
        fiber dimension, membership).
    """
    if samples < 1:
        raise ValueError('Need at least one sample.')

    locus = jump_locus(complex_, k, m, torus)
    rng = random.Random(seed)
    mismatches = []
    for _ in range(samples):
        point = CharacterPoint.sample(torus.n, rng, extra)
        dim = derived_fiber(complex_, point).get(k, 0)
        member = locus_membership(point, locus)
        if member != (dim >= m):
            mismatches.append((point, dim, member))

    return OracleReport(k, m, seed, samples, mismatches)


def _rational_roots(value, d):
    """ Return list with rational d-th roots of a rational number. """
    if d == 1:
        return [value]
    if value < 0 and d % 2 == 0:
        return []

    num, exact_num = integer_nthroot(abs(value.numerator), d)
    den, exact_den = integer_nthroot(value.denominator, d)
    if not (exact_num and exact_den):
        return []

    root = Fraction(int(num), int(den))
    if value < 0:
        return [-root]
    if d % 2 == 0:
        return [root, -root]
    return [root]


def _binomial_data(p):
    """ Return tuple (exponent difference, value) of a binomial
    ``c1 x^a - c2 x^b``, meaning ``x^(a-b) = c2 / c1``, or None.
    """
    terms = p.sorted_terms()
    if len(terms) != 2:
        return None
    (a, c1), (b, c2) = terms
    return tuple(i - j for i, j in zip(a, b)), -c2 / c1


def _sympy_gens(ring):
    from sympy import symbols

    gens = symbols(' '.join(ring.var_names))
    if not isinstance(gens, tuple):
        gens = (gens,)
    return gens


def _from_sympy(expr, ring, gens):
    from sympy import Poly as SympyPoly

    terms = SympyPoly(expr, *gens, domain='QQ').as_dict(native=False)
    return Poly(ring, {exp: Fraction(int(c.p), int(c.q))
                       for exp, c in terms.items()})


def _factors(p, gens):
    """ Return list of tuples (irreducible factor, multiplicity) over ℚ. """
    from sympy import factor_list

    _, factors = factor_list(p.as_sympy(gens), *gens)
    return [(_from_sympy(f, p.ring, gens), e) for f, e in factors]


def _eliminants(ideal, gens):
    """ Yield generators of the non-zero ideals ``I ∩ ℚ[x_i]``. """
    from sympy import groebner

    exprs = [p.as_sympy(gens) for p in ideal.generators]
    for x in gens:
        order = [g for g in gens if g != x] + [x]
        basis = groebner(exprs, *order, order='lex', domain='QQ')
        for g in basis.exprs:
            if g.free_symbols <= set([x]):
                yield _from_sympy(g, ideal.ring, gens)
                break


def _split(ideal, gens):
    """ Return list of strictly larger ideals whose zero sets cover the zero
    set of `ideal`, or None when no factorization is found.

    A reduced basis element, or a minimal univariate eliminant, with several
    irreducible factors splits the ideal along them. When it is a power of
    one factor, that factor lies in the radical and is added.
    """
    candidates = list(ideal.reduced_generators())
    for p in chain(candidates, _eliminants(ideal, gens)):
        factors = _factors(p, gens)
        if len(factors) > 1 or (factors and factors[0][1] > 1):
            return [ideal + Ideal(ideal.ring, [f]) for f, _ in factors]
    return None


def _binomial_pieces(ideal, torus):
    """ Return list of ideals with binomial Gröbner bases whose zero sets
    cover the zero set of `ideal` on the torus, or None.
    """
    gens = _sympy_gens(torus.ring)
    pending, pieces = [ideal], []
    while pending:
        current = torus.saturate_at_units(pending.pop())
        if current.is_unit() or current in pieces:
            continue
        if all(_binomial_data(p) is not None
               for p in current.reduced_generators()):
            pieces.append(current)
            continue

        split = _split(current, gens)
        if split is None:
            log.debug('{0!r} has no binomial splitting.'.format(current))
            return None
        pending.extend(split)
    return pieces


def _binomial_subtori(ideal, torus):
    """ Return list of translated subtori forming the zero set of a binomial
    ideal, or None when some coset has irrational values.
    """
    data = [_binomial_data(p) for p in ideal.reduced_generators()]
    vectors = [v for v, _ in data]
    values = [c for _, c in data]
    form, left, right = smith_decomposition(vectors)
    inverse = right.inv()

    choices = [[]]
    for i in range(left.rows):
        combined = Fraction(1)
        for j, c in enumerate(values):
            e = int(left[i, j])
            if e:
                combined *= c ** e

        d = int(form[i, i]) if i < min(form.shape) else 0
        if d == 0:
            if combined != 1:
                return None
            continue

        roots = _rational_roots(combined, d)
        if not roots:
            log.debug('Value {0} has no rational root of order {1}.'
                      .format(combined, d))
            return None
        basis = tuple(int(inverse[i, j]) for j in range(torus.n))
        choices = [chosen + [(basis, r)] for chosen in choices for r in roots]

    return [TranslatedSubtorus(torus, [b for b, _ in chosen],
                               [r for _, r in chosen]).normalized()
            for chosen in choices]


def decompose_translated_subtori(ideal, torus):
    """ Decompose the zero set of an ideal into translated subtori.

    The ideal is first split by factoring until every piece has a binomial
    Gröbner basis; squarefree parts take care of the non-reduced ideals
    coming from minors. Differences of the exponents in a binomial basis
    span a lattice. Its Smith form gives a basis of the saturated lattice,
    and the values on that basis are rational roots of the values on the
    binomials. The result is certified by :func:`verify_decomposition`
    against the original ideal.

    :return: :class:`DecompositionReport`; `certified` is False when some
        piece does not split into binomial ideals or some coset has
        irrational values.
    """
    ideal = torus.saturate_at_units(ideal)
    if ideal.is_unit():
        return DecompositionReport(ideal, [], True, True)
    if ideal.is_zero():
        return DecompositionReport(ideal, [TranslatedSubtorus(torus, [], [])],
                                   True, True)

    pieces = _binomial_pieces(ideal, torus)
    if pieces is None:
        return DecompositionReport(ideal, [], False, False)

    subtori = []
    for piece in pieces:
        found = _binomial_subtori(piece, torus)
        if found is None:
            return DecompositionReport(ideal, [], False, False)
        subtori.extend(t for t in found if t not in subtori)

    certified = verify_decomposition(ideal, subtori, torus)
    arithmetic = certified and all(torsion_check(t) for t in subtori)
    return DecompositionReport(ideal, subtori, certified, arithmetic)


def verify_decomposition(ideal, candidates, torus=None):
    """ Whether the union of the subtori equals the zero set of `ideal` on
    the torus, by radical membership of generators in both directions.
    """
    if torus is None:
        if not candidates:
            raise ValueError('Need a torus to verify an empty decomposition.')
        torus = candidates[0].torus
    if any(t.torus != torus for t in candidates):
        raise TorusMismatch('Subtori live on different tori.')

    ideal = torus.saturate_at_units(ideal)
    if not candidates:
        return ideal.is_unit()

    union = None
    for t in candidates:
        current = subtorus_ideal(t)
        union = current if union is None else intersection(union, current)

    return all(radical_membership(p, ideal) for p in union.generators) and \
        all(radical_membership(p, union) for p in ideal.generators)


def flatten(locus):
    """ Return single ideal whose zero set is the union of the components.
    """
    if not locus.components:
        return Ideal.unit(locus.torus.ring)

    result = locus.components[0]
    for component in locus.components[1:]:
        result = intersection(result, component)
    return result


def locus_codim(locus):
    return min((codimension(c) for c in locus.components), default=INF)


def codim_bound_check(complex_, torus):
    """ Return list of tuples (k, codim, bound) where ``S_1^k`` has
    codimension below ``|2k|``.
    """
    violations = []
    for k in complex_.degrees():
        codim = locus_codim(jump_locus(complex_, k, 1, torus))
        if codim < abs(2 * k):
            violations.append((k, codim, abs(2 * k)))
    return violations


def generic_vanishing_check(complex_, torus):
    """ Return list of degrees ``k != 0`` where ``S_1^k`` is the whole
    torus.
    """
    return [k for k in complex_.degrees()
            if k and jump_locus(complex_, k, 1, torus).is_everything()]


def euler_check(complex_, torus):
    """ Whether the Euler characteristic is not negative, and ``S_1^0`` is a
    proper subset when it vanishes.
    """
    chi = euler_characteristic(complex_)
    if chi < 0:
        return False
    if chi == 0:
        return not jump_locus(complex_, 0, 1, torus).is_everything()
    return True


def locus_report(locus):
    """ Return dict describing a locus and its decomposition.

    Components whose zero set is certified as a union of translated subtori
    are listed once per subtorus, with the subtorus and its arithmetic flag;
    other components are listed with their generators and codimension only.
    """
    components = []
    certified = True
    for ideal in locus.components:
        report = decompose_translated_subtori(ideal, locus.torus)
        if not report.certified:
            certified = False
            components.append({'generators': list(ideal.reduced_generators()),
                               'codim': codimension(ideal)})
            continue

        for subtorus in report.subtori:
            components.append({
                'generators': list(subtorus.ideal().reduced_generators()),
                'codim': subtorus.codimension,
                'subtorus': subtorus,
                'arithmetic': torsion_check(subtorus),
            })

    return {'k': locus.k, 'm': locus.m, 'components': components,
            'certified': certified}
