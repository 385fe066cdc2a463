"""
Intersection complexes of reflexive modules.

For a reflexive module `F` on a smooth space of dimension `n` the sequence

    F_0 = Hom(F, R),    F_k = tau_{<=k-1} D F_(k-1)

with ``D = Hom(-, R)`` starts with ``F_1 = F`` and alternates between two
complexes once ``2k - 1 >= n``. The intersection complex is ``F_l`` for the
smallest odd `l` with ``2l + 1 >= n``; every odd `l` beyond it gives the same
cohomology.

Reflexivity is decided on the canonical map ``M -> M**`` built from the
presentations. With ``M = coker A`` the dual ``M*`` is generated by the
columns of ``B = syz(A^T)`` with relations ``C = syz(B)``, the double dual
is ``ker C^T`` generated by the columns of ``E = syz(C^T)``, and the
canonical map sends the generators of `M` to the columns of ``B^T``.
"""
from collections import namedtuple

from charloci import log
from charloci.algebra.groebner import syzygies, lift
from charloci.algebra.ideal import INF
from charloci.algebra.modules import (FPModule, dual_module, free_resolution,
                                      hom_module, isomorphic)
from charloci.complexes import (FreeComplex, cohomology_agrees,
                                cohomology_module, dual, support_profile,
                                truncate_leq)
from charloci.exceptions import (CharLociError, NotReflexive,
                                 PreconditionFailed)
from charloci.perversity import is_m_perverse
from charloci.torus import UnitModel


def ell(n):
    """ Return smallest odd integer `l` with ``2l + 1 >= n``. """
    if n < 0:
        raise ValueError('Dimension must be 0 or larger, not {0}.'.format(n))
    return 2 * (-(-(n + 1) // 4)) - 1


def b_bound(n):
    """ Return ``ceil(n / 2) - 1``, above which ``H^i F_k`` vanishes. """
    return -(-n // 2) - 1


def _canonical_map(module):
    """ Return tuple (B^T, E) or None when the dual module is zero. """
    b = syzygies(module.relations.transpose())
    if b.cols == 0:
        return None
    return b.transpose(), syzygies(syzygies(b).transpose())


def is_torsion_free(module):
    """ Whether the canonical map ``M -> M**`` is injective. """
    module = module.pruned()
    if module.n_generators == 0 or module.is_free_presentation():
        return True

    data = _canonical_map(module)
    if data is None:
        return module.is_zero()

    evaluation, _ = data
    kernel = syzygies(evaluation)
    return all(module.contains_relation(column)
               for column in kernel.columns())


def is_reflexive(module):
    """ Whether the canonical map ``M -> M**`` is an isomorphism.

    Injectivity holds when the kernel of ``B^T`` consists of relations of
    `M`; surjectivity when every generator of ``M**`` lifts through ``B^T``.
    """
    module = module.pruned()
    if module.n_generators == 0 or module.is_free_presentation():
        return True

    data = _canonical_map(module)
    if data is None:
        return module.is_zero()

    evaluation, double_dual = data
    if not all(module.contains_relation(column)
               for column in syzygies(evaluation).columns()):
        log.debug('{0!r} has torsion.'.format(module))
        return False

    for column in double_dual.columns():
        if lift(column, evaluation) is None:
            log.debug('{0!r} is torsion free but not reflexive.'
                      .format(module))
            return False
    return True


def reflexive_hull(module):
    """ Return presentation of ``M**``. """
    ring = module.ring
    module = module.pruned()
    if module.n_generators == 0 or module.is_free_presentation():
        return module

    data = _canonical_map(module)
    if data is None:
        return FPModule(ring, 0)

    _, generators = data
    return FPModule(ring, generators.cols, syzygies(generators)).pruned()


class ICInput(object):
    """ Reflexive module for which an intersection complex is requested.

    :param module: :class:`charloci.algebra.modules.FPModule`.
    :param torus_mode: Measure supports on the torus inside the affine space
        of the ring instead of the whole affine space.
    """
    def __init__(self, module, torus_mode=False):
        self.module = module
        self.torus_mode = bool(torus_mode)

    @property
    def ring(self):
        return self.module.ring

    @property
    def ambient_dim(self):
        return self.module.ring.num_vars

    @property
    def torus(self):
        if self.torus_mode:
            return UnitModel(self.module.ring)
        return None

    def __repr__(self):
        return 'ICInput({0!r}, torus_mode={1})'.format(self.module,
                                                      self.torus_mode)


def ic_sequence(inp, steps):
    """ Return list with the complexes ``F_0 .. F_steps``.

    :param inp: :class:`ICInput`.
    :param steps: Index of the last complex, 0 or larger.
    """
    if steps < 0:
        raise ValueError('Number of steps must be 0 or larger.')

    sequence = [free_resolution(dual_module(inp.module))]
    for k in range(1, steps + 1):
        current = truncate_leq(dual(sequence[-1]), k - 1)
        log.debug('F_{0} spans degrees {1}..{2} with ranks {3}.'.format(
            k, current.lo, current.hi,
            [current.rank(d) for d in current.degrees()]))
        sequence.append(current)
    return sequence


def delta_amplitude_violations(sequence, n):
    """ Return list of tuples (k, i) where ``H^i D F_k`` is nonzero although
    ``i > max(b, n - k - 1)`` with ``b = ceil(n / 2) - 1``.
    """
    violations = []
    for k, complex_ in enumerate(sequence):
        bound = max(b_bound(n), n - k - 1)
        delta = dual(complex_)
        for i in range(bound + 1, delta.hi + 1):
            if cohomology_module(delta, i).n_generators:
                violations.append((k, i))
    return violations


def _check_ell(value, n):
    if value % 2 == 0 or 2 * value + 1 < n:
        raise ValueError('Need odd l with 2l + 1 >= {0}, not {1}.'
                         .format(n, value))


def intersection_complex(inp, ell_override=None):
    """ Return intersection complex of a reflexive module.

    :param inp: :class:`ICInput`.
    :param ell_override: Odd `l` with ``2l + 1 >= n`` used instead of
        :func:`ell`.
    :return: :class:`charloci.complexes.FreeComplex` with ``H^0`` isomorphic
        to the module.
    :raises NotReflexive: When the module is not reflexive.
    """
    if not is_reflexive(inp.module):
        raise NotReflexive('{0!r} is not reflexive.'.format(inp.module))

    n = inp.ambient_dim
    steps = ell(n) if ell_override is None else ell_override
    _check_ell(steps, n)
    return ic_sequence(inp, steps)[steps]


def _codim_bounds(complex_, torus):
    return [{'i': e.degree, 'codim': e.codim, 'required': 2 * e.degree + 1}
            for e in support_profile(complex_, torus)
            if e.degree >= 1 and e.codim != INF]


def _bounds_hold(bounds):
    return all(b['codim'] >= b['required'] for b in bounds)


def ic_verify(inp, ell_override=None, torsion=(), reconstruction=False):
    """ Build the intersection complex and check its properties.

    Failures are reported, never raised.

    :param inp: :class:`ICInput`.
    :param ell_override: Odd `l` used instead of :func:`ell`.
    :param torsion: Torsion modules that must admit no nonzero map into the
        intersection complex.
    :param reconstruction: Also rebuild the intersection complex from its
        own ``H^0`` and compare.
    :return: Dict with keys `h0_matches`, `codim_bounds`, `m_perverse`,
        `stable_under_ell_increase`, `dual_h0_matches`, `dual_codim_bounds`,
        `amplitude_violations`, `no_small_subobjects`, `reconstructs`,
        `passed` and `error` (None, or the message of the exception that
        stopped the construction). Checks that were not requested are None.
    """
    report = {
        'h0_matches': False,
        'codim_bounds': [],
        'm_perverse': False,
        'stable_under_ell_increase': False,
        'dual_h0_matches': False,
        'dual_codim_bounds': [],
        'amplitude_violations': [],
        'no_small_subobjects': None,
        'reconstructs': None,
        'passed': False,
        'error': None,
    }

    try:
        if not is_reflexive(inp.module):
            raise NotReflexive('{0!r} is not reflexive.'.format(inp.module))

        n = inp.ambient_dim
        steps = ell(n) if ell_override is None else ell_override
        _check_ell(steps, n)
        torus = inp.torus

        sequence = ic_sequence(inp, steps + 2)
        ic = sequence[steps]
        delta = dual(ic)

        report['h0_matches'] = isomorphic(cohomology_module(ic, 0),
                                          inp.module)
        report['codim_bounds'] = _codim_bounds(ic, torus)
        report['m_perverse'] = is_m_perverse(ic, torus)
        report['stable_under_ell_increase'] = \
            cohomology_agrees(ic, sequence[steps + 2])
        report['dual_h0_matches'] = isomorphic(cohomology_module(delta, 0),
                                               dual_module(inp.module))
        report['dual_codim_bounds'] = _codim_bounds(delta, torus)
        report['amplitude_violations'] = [
            {'n': k, 'i': i}
            for k, i in delta_amplitude_violations(sequence, n)]
        if torsion:
            report['no_small_subobjects'] = all(no_small_subobjects(ic, t)
                                                for t in torsion)
        if reconstruction:
            report['reconstructs'] = reconstruct(ic, inp.torus_mode).agrees
    except CharLociError as e:
        log.debug('IC verification stopped: {0}'.format(e))
        report['error'] = '{0}: {1}'.format(type(e).__name__, e)
        return report

    report['passed'] = all([report['h0_matches'],
                            _bounds_hold(report['codim_bounds']),
                            report['m_perverse'],
                            report['stable_under_ell_increase'],
                            report['dual_h0_matches'],
                            _bounds_hold(report['dual_codim_bounds']),
                            not report['amplitude_violations'],
                            report['no_small_subobjects'] is not False,
                            report['reconstructs'] is not False])
    return report


Reconstruction = namedtuple('Reconstruction', ['ic', 'agrees'])


def reconstruct(complex_, torus_mode=False):
    """ Rebuild a complex from its 0-th cohomology.

    :return: :class:`Reconstruction` with the intersection complex of
        ``H^0`` and whether its cohomology agrees with `complex_` in every
        degree.
    :raises NotReflexive: When ``H^0`` is not reflexive.
    """
    h0 = cohomology_module(complex_, 0)
    if h0.n_generators == 0:
        ic = FreeComplex.zero(complex_.ring)
    else:
        ic = intersection_complex(ICInput(h0, torus_mode))
    return Reconstruction(ic, cohomology_agrees(ic, complex_))


def no_small_subobjects(ic, torsion):
    """ Whether no nonzero map goes from a torsion module into `ic`.

    As `ic` has no cohomology in negative degrees, such maps factor through
    ``H^0``; they vanish outright when ``H^0`` is torsion free and are
    computed as ``Hom(T, H^0)`` otherwise.

    :param ic: :class:`charloci.complexes.FreeComplex`.
    :param torsion: :class:`charloci.algebra.modules.FPModule` with proper
        support.
    :raises PreconditionFailed: When `torsion` has positive generic rank.
    """
    if torsion.generic_rank():
        raise PreconditionFailed('{0!r} is supported everywhere.'
                                 .format(torsion))

    h0 = cohomology_module(ic, 0)
    if h0.n_generators == 0 or is_torsion_free(h0):
        return True
    return hom_module(torsion, h0).pruned().is_zero()
