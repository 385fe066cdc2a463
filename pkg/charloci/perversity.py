"""
Perverse coherent t-structures defined by supporting functions of the
codimension.

A supporting function assigns an integer ``p(c)`` to every codimension
``c = 0 .. n``. A complex `F` lies in ``pD<=k`` when
``p(codim Supp H^i F) >= i - k`` for every `i`, and in ``pD>=k`` when its
dual lies in ``pD<=-k`` for the dual function ``c - p(c)``. The functions

    m(c) = floor(c / 2)        m_hat(c) = ceil(c / 2)

are dual to each other; complexes in both ``mD<=0`` and ``mD>=0`` are the
m-perverse sheaves.
"""
from collections import namedtuple

from charloci import log
from charloci.algebra.ideal import INF
from charloci.complexes import dual, support_profile, amplitude
from charloci.exceptions import PreconditionFailed


class SupportingFunction(object):
    """ Function from codimensions ``0 .. n`` to integers.

    :param values: Sequence with ``p(0) .. p(n)``.
    """
    def __init__(self, values):
        self.values = tuple(int(v) for v in values)
        if not self.values:
            raise ValueError('A supporting function needs p(0).')

    @property
    def n(self):
        return len(self.values) - 1

    def __call__(self, codim):
        return self.values[codim]

    def is_supporting(self):
        """ Whether `p` does not decrease with the codimension. """
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    def __eq__(self, other):
        return isinstance(other, SupportingFunction) and \
            self.values == other.values

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return 'SupportingFunction({0})'.format(list(self.values))


def make_m(n):
    return SupportingFunction(c // 2 for c in range(n + 1))


def make_m_hat(n):
    return SupportingFunction((c + 1) // 2 for c in range(n + 1))


def zero_function(n):
    """ Function of the standard t-structure. """
    return SupportingFunction([0] * (n + 1))


def dual_function(p):
    return SupportingFunction(c - v for c, v in enumerate(p.values))


def is_valid_pair(p):
    """ Whether `p` and its dual are both supporting, so together they define
    a t-structure.
    """
    return p.is_supporting() and dual_function(p).is_supporting()


def _check(p, complex_):
    if not is_valid_pair(p):
        raise ValueError('{0!r} and its dual do not both support.'.format(p))
    if p.n != complex_.ring.num_vars:
        raise ValueError('{0!r} needs values up to codimension {1}.'
                         .format(p, complex_.ring.num_vars))


def in_leq(complex_, k, p, torus=None):
    """ Whether ``p(codim Supp H^i) >= i - k`` for every degree `i`.

    Degrees with vanishing cohomology pass.
    """
    _check(p, complex_)
    for entry in support_profile(complex_, torus):
        if entry.codim == INF:
            continue
        if p(entry.codim) < entry.degree - k:
            log.debug('Degree {0} with support of codimension {1} violates '
                      'p <= {2}.'.format(entry.degree, entry.codim, k))
            return False
    return True


def in_geq(complex_, k, p, torus=None):
    """ Whether the dual complex lies in ``pD<=-k`` for the dual function.
    """
    _check(p, complex_)
    return in_leq(dual(complex_), -k, dual_function(p), torus)


def is_m_perverse(complex_, torus=None):
    m = make_m(complex_.ring.num_vars)
    return in_leq(complex_, 0, m, torus) and in_geq(complex_, 0, m, torus)


SurpriseReport = namedtuple('SurpriseReport',
                            ['r', 'codim', 'codims', 'holds',
                             'equi_certified', 'subtori'])


def surprise_diagnostics(complex_, torus=None):
    """ Inspect the lowest cohomology of a complex `F` with `F` and its dual
    both in ``mD<=0``.

    Its support then has codimension exactly ``2r`` where `r` is the lowest
    degree with nonzero cohomology.

    :return: :class:`SurpriseReport`. `holds` states the codimension
        equality; `equi_certified` is True when every component of the
        support is a translated subtorus of codimension ``2r``, which needs a
        torus; `subtori` lists those components.
    :raises PreconditionFailed: When `F` or its dual is not in ``mD<=0``.
    """
    from charloci.loci import decompose_translated_subtori

    m = make_m(complex_.ring.num_vars)
    if not in_leq(complex_, 0, m, torus):
        raise PreconditionFailed('Complex does not lie in mD<=0.')
    if not in_leq(dual(complex_), 0, m, torus):
        raise PreconditionFailed('Dual complex does not lie in mD<=0.')

    profile = support_profile(complex_, torus)
    codims = dict((e.degree, e.codim) for e in profile)
    nonzero = [e for e in profile if e.codim != INF]
    if not nonzero:
        return SurpriseReport(None, INF, codims, True, True, [])

    lowest = min(nonzero, key=lambda e: e.degree)
    r = lowest.degree
    holds = lowest.codim == 2 * r

    equi_certified = False
    subtori = []
    if torus is not None:
        report = decompose_translated_subtori(lowest.ideal, torus)
        subtori = report.subtori
        equi_certified = report.certified and \
            all(t.codimension == 2 * r for t in subtori)

    return SurpriseReport(r, lowest.codim, codims, holds, equi_certified,
                          subtori)


def heart_shape(complex_, g, torus=None):
    """ Whether module cohomology lives in degrees ``0 .. g`` and
    ``codim Supp H^i >= 2i``.
    """
    for entry in support_profile(complex_, torus):
        if entry.codim == INF:
            continue
        if not 0 <= entry.degree <= g or entry.codim < 2 * entry.degree:
            return False
    return True


def standard_bounds(complex_):
    """ Whether the zero function reproduces the standard t-structure: the
    complex lies in ``D<=k`` exactly when its cohomology vanishes above `k`.
    """
    p = zero_function(complex_.ring.num_vars)
    bounds = amplitude(complex_)
    for k in range(complex_.lo - 1, complex_.hi + 1):
        expected = bounds is None or bounds[1] <= k
        if in_leq(complex_, k, p) != expected:
            return False
    return True


def perversity_report(complex_, torus=None, g=None):
    """ Return dict with the perversity checks of a complex. """
    m = make_m(complex_.ring.num_vars)
    leq = in_leq(complex_, 0, m, torus)
    geq = in_geq(complex_, 0, m, torus)
    if g is None:
        g = complex_.ring.num_vars // 2

    report = {
        'leq': leq,
        'geq': geq,
        'heart': heart_shape(complex_, g, torus),
        'profile': [{'degree': e.degree, 'codim': e.codim}
                    for e in support_profile(complex_, torus)],
    }
    if leq and in_leq(dual(complex_), 0, m, torus):
        surprise = surprise_diagnostics(complex_, torus)
        report['surprise'] = {'r': surprise.r, 'codim': surprise.codim,
                              'equi_certified': surprise.equi_certified}
    return report
