"""
Verification suites.

Every check is a function registered for one or more suites and the kinds
of input it understands::

    @register(suites=['codim'], kinds=['objects', 'complex'])
    def check_codim(subject, settings):
        return []

A check receives a :class:`Subject` and :class:`Settings` and returns a list
of :class:`Failure`; every failure names the operation, its inputs and the
claim that does not hold. :func:`run_suites` runs the checks matching the
requested suites for all subjects.

Expectations bundled with an input file are available as
:attr:`Subject.expect`. Known keys are `perverse`, `euler`, `arithmetic`,
`codim_equality`, `surprise`, `fibers`, `loci`, `reflexive`, and
`reconstruct`.
"""
import random
from collections import namedtuple
from itertools import combinations

from charloci import log
from charloci.algebra.ideal import EMPTY, Ideal, INF, krull_dimension
from charloci.algebra.groebner import module_groebner_basis
from charloci.algebra.matrix import PolyMatrix
from charloci.algebra.modules import free_resolution, isomorphic
from charloci.algebra.poly import Poly
from charloci.algebra.ring import PolyRing
from charloci.complexes import (ChainMap, cohomology_module, cone,
                                derived_fiber, direct_sum, dual,
                                euler_characteristic, shift)
from charloci.examples import bundled_examples, load_example
from charloci.exceptions import CharLociError, VerificationFailed
from charloci.intersection import ICInput, ell, ic_verify
from charloci.loci import (codim_bound_check, decompose_translated_subtori,
                           euler_check, generic_vanishing_check, jump_locus,
                           locus_codim, sampled_oracle_check)
from charloci.perversity import (in_geq, in_leq, is_m_perverse, make_m,
                                 make_m_hat, surprise_diagnostics)
from charloci.route import Map
from charloci.serialization import ModuleFile, ObjectFile
from charloci.torus import SAMPLE_POOL, UnitModel, sample_points
from charloci.utils import to_fraction

Failure = namedtuple('Failure', ['operation', 'inputs', 'claim', 'detail'])

Settings = namedtuple('Settings', ['samples', 'seed', 'max_m',
                                   'exchange_size', 'random_ideals'])
Settings.__new__.__defaults__ = (50, 7, 3, 20, 30)

SUITES = ('base-change', 'loci', 'structure', 'codim', 'generic-vanishing',
          'surprise', 'exchange', 'ic', 'kernel', 'expect')

suite_map = Map()


def register(suites=None, kinds=None):
    """ A decorator that is used to register a check for given suites and
    input kinds. Any argument can be omitted to match any value.

    :param suites: A list (or iterable) of suite names.
    :param kinds: A list (or iterable) of input kinds: 'objects', 'complex'
        or 'module'.
    """
    def inner(f):
        suite_map.add_rule(f, suites, kinds)
        return f

    return inner


class Subject(object):
    """ Input under verification.

    :param name: Name used in failure reports.
    :param value: :class:`ObjectFile`, :class:`FreeComplex` or
        :class:`ModuleFile`.
    :param expect: Dict with expectations.
    """
    def __init__(self, name, value, expect=None):
        self.name = name
        self.value = value
        self.expect = dict(expect or {})
        self._complex = None

    @property
    def kind(self):
        if isinstance(self.value, ObjectFile):
            return 'objects'
        if isinstance(self.value, ModuleFile):
            return 'module'
        return 'complex'

    @property
    def complex(self):
        """ Transform of an object file, or the complex itself. """
        if self._complex is None:
            if self.kind == 'objects':
                self._complex = self.value.transform()
            elif self.kind == 'complex':
                self._complex = self.value
        return self._complex

    @property
    def torus(self):
        if self.kind == 'objects':
            return self.value.torus
        if self.kind == 'complex':
            return UnitModel(self.value.ring)
        if self.value.torus_mode:
            return UnitModel(self.value.module.ring)
        return None

    @property
    def extra(self):
        if self.kind == 'objects':
            return self.value.spectrum()
        return ()

    def inputs(self, **extra):
        result = {'input': self.name}
        result.update(extra)
        return result

    def __repr__(self):
        return 'Subject({0!r}, {1})'.format(self.name, self.kind)


def run_suites(subjects, suites, settings=None, raise_on_failure=False):
    """ Run checks of the given suites on every subject.

    :param subjects: List of :class:`Subject`.
    :param suites: List of suite names; 'all' selects every suite.
    :param raise_on_failure: Raise instead of returning failures.
    :return: List of :class:`Failure`.
    :raises ValueError: When a suite is unknown.
    :raises VerificationFailed: When `raise_on_failure` is set and a check
        failed.
    """
    settings = settings or Settings()
    names = list(SUITES) if 'all' in suites else list(suites)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError('Unknown suite(s): {0}.'.format(', '.join(unknown)))

    failures = []
    for subject in subjects:
        for suite in names:
            for check in suite_map.match(suite, subject.kind):
                try:
                    found = check(subject, settings)
                except CharLociError as e:
                    found = [Failure(check.__name__, subject.inputs(),
                                     'check runs to completion',
                                     '{0}: {1}'.format(type(e).__name__, e))]
                log.debug('Suite {0} on {1}: {2} failure(s).'
                          .format(suite, subject.name, len(found)))
                failures.extend(found)

    if failures and raise_on_failure:
        raise VerificationFailed(failures)
    return failures


def _nonzero(dims):
    return dict((k, d) for k, d in dims.items() if d)


@register(suites=['base-change'], kinds=['objects'])
def check_base_change(subject, settings):
    complex_ = subject.complex
    failures = []
    points = sample_points(subject.torus.n, settings.samples, settings.seed,
                           subject.extra)
    for point in points:
        fiber = _nonzero(derived_fiber(complex_, point))
        twisted = _nonzero(subject.value.twisted_cohomology(point))
        if fiber != twisted:
            failures.append(Failure(
                'derived_fiber', subject.inputs(point=point),
                'fibers of the transform compute twisted cohomology',
                {'fiber': fiber, 'twisted': twisted}))
    return failures


@register(suites=['loci'], kinds=['objects', 'complex'])
def check_loci(subject, settings):
    complex_ = subject.complex
    failures = []
    for k in complex_.degrees():
        for m in range(1, settings.max_m + 1):
            report = sampled_oracle_check(complex_, k, m, subject.torus,
                                          settings.samples, settings.seed,
                                          subject.extra)
            for point, dim, member in report.mismatches:
                failures.append(Failure(
                    'jump_locus', subject.inputs(k=k, m=m, point=point),
                    'locus membership matches fiber dimension',
                    {'dimension': dim, 'member': member}))
    return failures


@register(suites=['structure'], kinds=['objects'])
def check_structure(subject, settings):
    complex_ = subject.complex
    torus = subject.torus
    failures = []
    arithmetic = True
    for k in complex_.degrees():
        for ideal in jump_locus(complex_, k, 1, torus).components:
            report = decompose_translated_subtori(ideal, torus)
            if not report.certified:
                failures.append(Failure(
                    'decompose_translated_subtori',
                    subject.inputs(k=k, ideal=ideal),
                    'jump loci are finite unions of translated subtori',
                    'decomposition not certified'))
            arithmetic = arithmetic and report.arithmetic

    expected = subject.expect.get('arithmetic')
    if expected is not None and not failures and arithmetic != expected:
        failures.append(Failure(
            'torsion_check', subject.inputs(),
            'jump loci are translated by torsion points exactly for torsion '
            'twists and monodromy',
            {'arithmetic': arithmetic, 'expected': expected}))
    return failures


@register(suites=['codim'], kinds=['objects', 'complex'])
def check_codim(subject, settings):
    expected = subject.expect.get('perverse')
    if expected is None:
        return []

    complex_ = subject.complex
    torus = subject.torus
    failures = []
    perverse = is_m_perverse(complex_, torus)
    if perverse != expected:
        failures.append(Failure('is_m_perverse', subject.inputs(),
                                'perversity of the transform',
                                {'perverse': perverse,
                                 'expected': expected}))
    if not expected:
        return failures

    m = make_m(complex_.ring.num_vars)
    if in_geq(shift(complex_, 1), 0, m, torus):
        failures.append(Failure('in_geq', subject.inputs(shift=1),
                                'shift by 1 leaves mD>=0', None))
    if in_leq(shift(complex_, -1), 0, m, torus):
        failures.append(Failure('in_leq', subject.inputs(shift=-1),
                                'shift by -1 leaves mD<=0', None))

    for k, codim, bound in codim_bound_check(complex_, torus):
        failures.append(Failure('codim_bound_check', subject.inputs(k=k),
                                'codim S_1^k >= |2k| for perverse objects',
                                {'codim': codim, 'bound': bound}))

    for k in subject.expect.get('codim_equality', []):
        codim = locus_codim(jump_locus(complex_, k, 1, torus))
        if codim != abs(2 * k):
            failures.append(Failure('locus_codim', subject.inputs(k=k),
                                    'codim S_1^k = |2k| is attained',
                                    {'codim': codim}))
    return failures


@register(suites=['generic-vanishing'], kinds=['objects', 'complex'])
def check_generic_vanishing(subject, settings):
    complex_ = subject.complex
    torus = subject.torus
    failures = []

    if subject.expect.get('perverse'):
        for k in generic_vanishing_check(complex_, torus):
            failures.append(Failure('generic_vanishing_check',
                                    subject.inputs(k=k),
                                    'S_1^k is proper for k != 0', None))
        if not euler_check(complex_, torus):
            failures.append(Failure(
                'euler_check', subject.inputs(),
                'chi >= 0, and S_1^0 is proper when chi = 0',
                {'chi': euler_characteristic(complex_)}))

    expected = subject.expect.get('euler')
    if expected is not None:
        chi = euler_characteristic(complex_)
        values = [chi]
        if subject.kind == 'objects':
            values.append(subject.value.euler_characteristic())
        if any(v != expected for v in values):
            failures.append(Failure('euler_characteristic', subject.inputs(),
                                    'Euler characteristic of the object',
                                    {'chi': values, 'expected': expected}))
    return failures


@register(suites=['surprise'], kinds=['objects', 'complex'])
def check_surprise(subject, settings):
    expected = subject.expect.get('surprise')
    if not expected:
        return []

    report = surprise_diagnostics(subject.complex, subject.torus)
    found = {'r': report.r, 'codim': report.codim,
             'equi_certified': report.equi_certified,
             'components': len(report.subtori)}
    if not report.holds or any(found[key] != value
                               for key, value in expected.items()
                               if key in found):
        return [Failure('surprise_diagnostics', subject.inputs(),
                        'lowest cohomology of a perverse object is supported '
                        'in codimension 2r', {'found': found,
                                              'expected': expected})]
    return []


def exchange_partners(subject):
    """ Return list of tuples (name, complex) with the bundled examples,
    other than `subject`, whose complexes live in the same ring.
    """
    ring = subject.torus.ring
    partners = []
    for name in sorted(bundled_examples()):
        if name == subject.name:
            continue
        other = Subject(name, *load_example(name)[:2])
        if other.kind != 'module' and other.torus.ring == ring:
            partners.append((name, other.complex))
    return partners


def random_complexes(subject, count, seed):
    """ Return list of `count` tuples (complex, recipe) built from the
    complex of `subject` by shifts, sums and cones of multiplication by
    ``x_i - c``.

    Sums draw from the subject and its :func:`exchange_partners`; the
    first complexes each start from the sum with one partner.
    """
    base = subject.complex
    ring = base.ring
    partners = [(subject.name, base)] + exchange_partners(subject)
    rng = random.Random(seed)

    result = []
    for index in range(count):
        complex_, recipe = base, []
        if index + 1 < len(partners):
            name, other = partners[index + 1]
            complex_ = direct_sum(complex_, other)
            recipe.append('sum {0}'.format(name))

        for _ in range(rng.randint(1, 2)):
            choice = rng.choice(['shift', 'sum', 'cone'] if ring.num_vars
                                else ['shift', 'sum'])
            if choice == 'shift':
                s = rng.randint(-2, 2)
                complex_ = shift(complex_, s)
                recipe.append('shift {0}'.format(s))
            elif choice == 'sum':
                s = rng.randint(-1, 1)
                name, other = rng.choice(partners)
                complex_ = direct_sum(complex_, shift(other, s))
                recipe.append('sum {0} shift {1}'.format(name, s))
            else:
                i = rng.randrange(ring.num_vars)
                c = rng.choice(SAMPLE_POOL)
                f = Poly.variable(ring, i) - c
                matrices = dict(
                    (d, PolyMatrix.identity(ring, complex_.rank(d)).scale(f))
                    for d in complex_.degrees())
                complex_ = cone(ChainMap(complex_, complex_, matrices,
                                         check=False))
                recipe.append('cone {0}'.format(f))
        result.append((complex_, '; '.join(recipe)))
    return result


@register(suites=['exchange'], kinds=['objects', 'complex'])
def check_exchange(subject, settings):
    torus = subject.torus
    n = subject.complex.ring.num_vars
    m, m_hat = make_m(n), make_m_hat(n)
    failures = []
    for complex_, recipe in random_complexes(subject, settings.exchange_size,
                                             settings.seed):
        dualized = dual(complex_)
        for k in range(-2, 3):
            left = in_leq(complex_, k, m, torus)
            right = in_geq(dualized, -k, m_hat, torus)
            if left != right:
                failures.append(Failure(
                    'in_leq/in_geq', subject.inputs(recipe=recipe, k=k),
                    'F in mD<=k exactly when its dual is in m_hatD>=-k',
                    {'leq': left, 'geq_of_dual': right}))
    return failures


@register(suites=['ic'], kinds=['module'])
def check_ic(subject, settings):
    failures = []
    for n, expected in ((1, 1), (3, 1), (4, 3)):
        if ell(n) != expected:
            failures.append(Failure('ell', {'n': n},
                                    'smallest odd l with 2l + 1 >= n',
                                    {'ell': ell(n), 'expected': expected}))

    value = subject.value
    report = ic_verify(ICInput(value.module, value.torus_mode),
                       torsion=value.torsion,
                       reconstruction=subject.expect.get('reconstruct',
                                                         False))
    if subject.expect.get('reflexive', True):
        if not report['passed']:
            failures.append(Failure(
                'ic_verify', subject.inputs(),
                'the intersection complex is m-perverse with H^0 = F',
                report))
    elif not (report['error'] or '').startswith('NotReflexive'):
        failures.append(Failure('ic_verify', subject.inputs(),
                                'non reflexive input is refused',
                                report))
    return failures


def _matrices(subject):
    if subject.kind == 'module':
        return [subject.value.module.relations]
    return list(subject.complex.differentials.values())


def _modules(subject):
    if subject.kind == 'module':
        return [subject.value.module]
    complex_ = subject.complex
    return [m for m in (cohomology_module(complex_, d)
                        for d in complex_.degrees()) if m.n_generators]


def _sympy_dimension(ideal):
    """ Return dimension of ``V(ideal)`` from a Gröbner basis computed by
    sympy.
    """
    from sympy import groebner, symbols, Poly as SympyPoly

    gens = symbols(' '.join(ideal.ring.var_names))
    if not isinstance(gens, tuple):
        gens = (gens,)
    exprs = [p.as_sympy(gens) for p in ideal.generators]
    basis = groebner(exprs, *gens, order='grevlex')
    if any(SympyPoly(g, *gens).is_ground for g in basis.exprs):
        return EMPTY

    supports = []
    for g in basis.exprs:
        lead = SympyPoly(g, *gens).monoms(order='grevlex')[0]
        supports.append(frozenset(k for k, e in enumerate(lead) if e))
    n = len(gens)
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            if not any(s <= frozenset(subset) for s in supports):
                return size
    return 0


def random_ideal(ring, rng):
    """ Return ideal with 1 to 3 sparse generators of degree at most 2. """
    gens = []
    for _ in range(rng.randint(1, 3)):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            exp = tuple(rng.randint(0, 2) for _ in range(ring.num_vars))
            terms[exp] = to_fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        gens.append(Poly(ring, terms))
    return Ideal(ring, gens)


@register(suites=['kernel'])
def check_kernel(subject, settings):
    failures = []
    for matrix in _matrices(subject):
        if matrix.is_zero():
            continue
        if not module_groebner_basis(matrix).satisfies_buchberger_criterion():
            failures.append(Failure('module_groebner_basis',
                                    subject.inputs(matrix=matrix.shape),
                                    'every S-vector reduces to zero', None))

    for module in _modules(subject):
        resolution = free_resolution(module)
        inexact = [d for d in range(resolution.lo, 0)
                   if cohomology_module(resolution, d).n_generators]
        if inexact or not isomorphic(cohomology_module(resolution, 0),
                                     module):
            failures.append(Failure(
                'free_resolution', subject.inputs(module=repr(module)),
                'resolutions are exact except for H^0 = M',
                {'inexact_degrees': inexact}))

    if subject.kind == 'module':
        n = subject.value.module.ring.num_vars
    else:
        n = subject.complex.ring.num_vars
    ring = PolyRing(['x{0}'.format(i + 1) for i in range(min(max(n, 1), 4))],
                    'grevlex')
    rng = random.Random(settings.seed)
    for _ in range(settings.random_ideals):
        ideal = random_ideal(ring, rng)
        ours, oracle = krull_dimension(ideal), _sympy_dimension(ideal)
        if ours != oracle:
            failures.append(Failure('krull_dimension',
                                    {'ideal': ideal},
                                    'dimension from leading terms',
                                    {'dimension': ours, 'oracle': oracle}))
    return failures


@register(suites=['expect'], kinds=['objects', 'complex'])
def check_expectations(subject, settings):
    complex_ = subject.complex
    torus = subject.torus
    failures = []

    for entry in subject.expect.get('fibers', []):
        point = torus.point(entry['point'])
        expected = _nonzero(dict((int(k), v)
                                 for k, v in entry['dims'].items()))
        found = _nonzero(derived_fiber(complex_, point))
        if found != expected:
            failures.append(Failure('derived_fiber',
                                    subject.inputs(point=point),
                                    'fiber dimensions of the transform',
                                    {'found': found, 'expected': expected}))

    for entry in subject.expect.get('loci', []):
        locus = jump_locus(complex_, entry['k'], entry.get('m', 1), torus)
        inputs = subject.inputs(k=locus.k, m=locus.m)
        if 'codim' in entry:
            expected = INF if entry['codim'] == 'inf' else entry['codim']
            if locus_codim(locus) != expected:
                failures.append(Failure('locus_codim', inputs,
                                        'codimension of the jump locus',
                                        {'codim': locus_codim(locus),
                                         'expected': expected}))
        for values in entry.get('contains', []):
            if not locus.contains(torus.point(values)):
                failures.append(Failure('locus_membership', inputs,
                                        'point lies on the jump locus',
                                        {'point': values}))
        for values in entry.get('avoids', []):
            if locus.contains(torus.point(values)):
                failures.append(Failure('locus_membership', inputs,
                                        'point lies off the jump locus',
                                        {'point': values}))
    return failures
