import random

import pytest

from charloci.algebra.ideal import krull_dimension
from charloci.algebra.ring import PolyRing
from charloci.examples import load_example
from charloci.exceptions import VerificationFailed
from charloci.verification import (SUITES, Settings, Subject, _sympy_dimension,
                                   exchange_partners, random_complexes,
                                   random_ideal, run_suites, suite_map)


@pytest.fixture
def subject():
    return lambda name: Subject(name, *load_example(name)[:2])


@pytest.fixture
def settings():
    return Settings(samples=8, seed=7, max_m=2, exchange_size=3,
                    random_ideals=5)


def test_every_suite_has_checks():
    assert suite_map.suites() == sorted(SUITES)


@pytest.mark.parametrize('name, kind', [
    ('constant_g1', 'objects'),
    ('koszul_complex', 'complex'),
    ('ic_free', 'module'),
])
def test_subject_kind(subject, name, kind):
    assert subject(name).kind == kind


def test_module_subject_has_no_complex(subject):
    assert subject('ic_free').complex is None
    assert subject('ic_free').torus is None


@pytest.mark.parametrize('name, suites', [
    ('constant_g1', ['base-change', 'loci', 'codim', 'expect']),
    ('twist_torsion', ['structure', 'generic-vanishing']),
    ('koszul_complex', ['loci', 'exchange']),
    ('maximal_ideal', ['ic']),
])
def test_corpus_passes(subject, settings, name, suites):
    assert run_suites([subject(name)], suites, settings) == []


def test_failed_expectation(subject, settings):
    failing = subject('skyscraper_rank3')
    failing.expect['euler'] = 1

    failures = run_suites([failing], ['generic-vanishing'], settings)

    assert [f.operation for f in failures] == ['euler_characteristic']
    assert failures[0].inputs == {'input': 'skyscraper_rank3'}

    with pytest.raises(VerificationFailed) as exc_info:
        run_suites([failing], ['generic-vanishing'], settings,
                   raise_on_failure=True)
    assert exc_info.value.failures == failures


def test_refused_module_is_reported(subject, settings):
    failing = subject('maximal_ideal')
    failing.expect['reflexive'] = True

    failures = run_suites([failing], ['ic'], settings)

    assert len(failures) == 1
    assert failures[0].operation == 'ic_verify'


def test_unknown_suite(subject):
    with pytest.raises(ValueError):
        run_suites([subject('constant_g1')], ['everything'])


def test_exchange_partners_share_the_ring(subject):
    names = [name for name, _ in exchange_partners(subject('constant_g1'))]

    assert names == ['cone_g1', 'skyscraper_rank3', 'twist_character',
                     'twist_nontorsion', 'twist_torsion', 'unipotent_g1']
    assert exchange_partners(subject('koszul_complex')) == []


def test_random_complexes_mix_partners(subject):
    base = subject('constant_g1')
    complexes = random_complexes(base, 8, seed=3)
    recipes = [recipe for _, recipe in complexes]

    assert len(complexes) == 8
    assert recipes[0].startswith('sum cone_g1')
    assert recipes[4].startswith('sum twist_torsion')
    assert recipes == [r for _, r in random_complexes(base, 8, seed=3)]
    # Sums with a partner change the shape of the base complex
    assert len(set(tuple((d, c.rank(d)) for d in c.degrees())
                   for c, _ in complexes)) > 2


def test_random_ideals_match_sympy():
    ring = PolyRing(['x1', 'x2', 'x3'], 'grevlex')
    rng = random.Random(11)

    for _ in range(10):
        ideal = random_ideal(ring, rng)
        assert krull_dimension(ideal) == _sympy_dimension(ideal)


def test_random_ideals_are_seeded():
    ring = PolyRing(['x1', 'x2'], 'grevlex')

    first = random_ideal(ring, random.Random(3))
    assert random_ideal(ring, random.Random(3)) == first
