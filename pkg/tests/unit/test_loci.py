import pytest

from charloci.algebra.ideal import INF, Ideal
from charloci.algebra.poly import parse_poly
from charloci.loci import (codim_bound_check, decompose_translated_subtori,
                           euler_check, flatten, generic_vanishing_check,
                           jump_locus, locus_codim, locus_membership,
                           locus_report, sampled_oracle_check,
                           verify_decomposition)
from charloci.torus import CharacterPoint, TranslatedSubtorus
from charloci.transform import LocalSystemObject, mellin_transform
from charloci.exceptions import TorusMismatch


@pytest.fixture
def ideal(curve):
    return lambda *gens: Ideal(curve.ring,
                               [parse_poly(g, curve.ring) for g in gens])


@pytest.fixture
def constant(curve):
    return mellin_transform(LocalSystemObject.constant(curve))


@pytest.fixture
def unipotent(curve):
    identity = [[1, 0], [0, 1]]
    return mellin_transform(LocalSystemObject(
        curve, 1, identity, [[[1, 1], [0, 1]], identity], shift=1))


@pytest.mark.parametrize('k, m, codim', [
    (-1, 1, 2),
    (0, 1, 2),
    (0, 2, 2),
    (0, 3, INF),
    (1, 1, 2),
    (1, 2, INF),
])
def test_jump_locus_of_constant(curve, constant, k, m, codim):
    locus = jump_locus(constant, k, m, curve)

    assert locus_codim(locus) == codim
    assert locus.contains([1, 1]) is (codim != INF)
    assert not locus.contains([1, -1])


def test_jump_locus_rejects_bad_input(curve, surface, constant):
    with pytest.raises(ValueError):
        jump_locus(constant, 0, 0, curve)
    with pytest.raises(TorusMismatch):
        jump_locus(constant, 0, 1, surface)


def test_locus_components_are_saturated(curve, constant):
    locus = jump_locus(constant, 0, 1, curve)

    assert locus.components == [Ideal(curve.ring, [
        parse_poly('x1 - 1', curve.ring), parse_poly('x2 - 1', curve.ring)])]
    assert not locus.is_everything()
    assert not locus.is_empty()


@pytest.mark.parametrize('k, m', [(-1, 1), (0, 1), (0, 2), (0, 3), (1, 1)])
def test_sampled_oracle_check(curve, unipotent, k, m):
    report = sampled_oracle_check(unipotent, k, m, curve, samples=40, seed=5,
                                  extra=[1])

    assert report.mismatches == []
    assert report.samples == 40


def test_sampled_oracle_needs_samples(curve, constant):
    with pytest.raises(ValueError):
        sampled_oracle_check(constant, 0, 1, curve, 0, 1)


@pytest.mark.parametrize('gens, points, arithmetic', [
    (['x1^2 - 1'], [[1, 5], [-1, 5]], True),
    (['x1^2 - 4'], [[2, 3], [-2, 3]], False),
    (['x1 - 1', 'x2 + 1'], [[1, -1]], True),
])
def test_decompose_translated_subtori(curve, ideal, gens, points,
                                      arithmetic):
    report = decompose_translated_subtori(ideal(*gens), curve)

    assert report.certified
    assert report.arithmetic is arithmetic
    assert len(report.subtori) == len(points)
    for values in points:
        point = CharacterPoint(values)
        assert sum(t.contains(point) for t in report.subtori) == 1


def test_decompose_binomial_with_mixed_exponents(curve, ideal):
    report = decompose_translated_subtori(ideal('x1 - x2^2'), curve)

    assert report.certified
    assert len(report.subtori) == 1
    assert report.subtori[0].contains(CharacterPoint([4, -2]))


@pytest.mark.parametrize('gens, inside, outside', [
    # (x1 - 1, x2 - 1)^2
    (['x1^2 - 2*x1 + 1', 'x1*x2 - x1 - x2 + 1', 'x2^2 - 2*x2 + 1'],
     [[1, 1]], [[1, 2]]),
    # (x1 - x2)^2
    (['x1^2 - 2*x1*x2 + x2^2'], [[3, 3], [-1, -1]], [[1, 2]]),
])
def test_decompose_non_reduced(curve, ideal, gens, inside, outside):
    squared = ideal(*gens)
    report = decompose_translated_subtori(squared, curve)

    assert report.certified
    assert report.arithmetic
    assert len(report.subtori) == 1
    assert verify_decomposition(squared, report.subtori)
    assert all(report.subtori[0].contains(CharacterPoint(v)) for v in inside)
    assert not any(report.subtori[0].contains(CharacterPoint(v))
                   for v in outside)


def test_decompose_splits_reducible_generators(curve, ideal):
    # (x1 - 1)(x2 - 1) is a union of two codimension one subtori
    report = decompose_translated_subtori(ideal('x1*x2 - x1 - x2 + 1'),
                                          curve)

    assert report.certified
    assert sorted(t.codimension for t in report.subtori) == [1, 1]
    for values in ([1, 5], [5, 1]):
        point = CharacterPoint(values)
        assert sum(t.contains(point) for t in report.subtori) == 1


def test_jump_locus_of_unipotent_is_certified(curve, unipotent):
    report = decompose_translated_subtori(
        flatten(jump_locus(unipotent, 0, 1, curve)), curve)

    assert report.certified
    assert len(report.subtori) == 1
    assert report.subtori[0].contains(CharacterPoint([1, 1]))


@pytest.mark.parametrize('gens', [
    ['x1^2 - 2'],
    ['x1 + x2 + 1'],
])
def test_decompose_not_certified(curve, ideal, gens):
    report = decompose_translated_subtori(ideal(*gens), curve)

    assert not report.certified
    assert report.subtori == []


def test_decompose_whole_and_empty(curve, ideal):
    whole = decompose_translated_subtori(Ideal.zero(curve.ring), curve)
    assert whole.certified
    assert whole.subtori[0].codimension == 0

    # V(x1) misses the torus
    empty = decompose_translated_subtori(ideal('x1'), curve)
    assert empty.certified
    assert empty.subtori == []


def test_verify_decomposition(curve, ideal):
    plus = TranslatedSubtorus(curve, [(1, 0)], [1])
    minus = TranslatedSubtorus(curve, [(1, 0)], [-1])

    assert verify_decomposition(ideal('x1^2 - 1'), [plus, minus])
    assert not verify_decomposition(ideal('x1^2 - 1'), [plus])
    assert verify_decomposition(ideal('1'), [], curve)


def test_flatten(curve, ideal):
    locus = jump_locus(mellin_transform(
        LocalSystemObject(curve, 1, [[1, 0], [0, 1]], [[[1]], [[1]]],
                          shift=1)), 0, 1, curve)
    flat = flatten(locus)

    assert flat == ideal('x1 - 1', 'x2 - 1')
    assert locus_membership([1, 1], locus)


@pytest.mark.parametrize('fixture', ['constant', 'unipotent'])
def test_perverse_checks(request, curve, fixture):
    complex_ = request.getfixturevalue(fixture)

    assert codim_bound_check(complex_, curve) == []
    assert generic_vanishing_check(complex_, curve) == []
    assert euler_check(complex_, curve)


def test_generic_vanishing_fails_off_perverse(curve):
    shifted = mellin_transform(LocalSystemObject.skyscraper(curve, shift=-1))

    assert generic_vanishing_check(shifted, curve) == [1]
    assert codim_bound_check(shifted, curve) == [(1, 0, 2)]


def test_locus_report(curve, constant):
    report = locus_report(jump_locus(constant, 0, 1, curve))

    assert report['k'] == 0
    assert report['certified']
    assert len(report['components']) == 1
    component = report['components'][0]
    assert component['codim'] == 2
    assert component['arithmetic']
    assert component['subtorus'].contains(CharacterPoint([1, 1]))
