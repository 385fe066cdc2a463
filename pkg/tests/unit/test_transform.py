import pytest
from fractions import Fraction

from charloci.algebra.poly import parse_poly
from charloci.complexes import derived_fiber, euler_characteristic
from charloci.torus import CharacterPoint, CharacterTorus, LatticeSurjection
from charloci.transform import (ElementaryComplex, LocalSystemObject,
                                ScalarCone, mellin_transform, pullback,
                                spectrum_coordinates, transform_sum,
                                twisted_cohomology, verdier_dual)
from charloci.exceptions import NonCommuting, NonInvertible, TorusMismatch

IDENTITY = [[1, 0], [0, 1]]
JORDAN = [[1, 1], [0, 1]]


@pytest.fixture
def constant(curve):
    return LocalSystemObject.constant(curve)


@pytest.fixture
def unipotent(curve):
    return LocalSystemObject(curve, 1, IDENTITY, [JORDAN, IDENTITY], shift=1)


def test_constant_object(constant):
    assert constant.shift == 1
    assert constant.rank == 1
    assert list(constant.degrees()) == [-1, 0, 1]


def test_singular_monodromy(curve):
    with pytest.raises(NonInvertible):
        LocalSystemObject(curve, 1, IDENTITY, [[[0]], [[1]]])


def test_monodromy_must_commute(curve):
    with pytest.raises(NonCommuting):
        LocalSystemObject(curve, 1, IDENTITY,
                          [JORDAN, [[1, 0], [1, 1]]])


@pytest.mark.parametrize('h, embedding, monodromy', [
    (1, [[1, 0]], [[[1]], [[1]]]),
    (1, [[1, 2], [1, 2]], [[[1]], [[1]]]),
    (1, IDENTITY, [[[1]]]),
    (2, [], []),
])
def test_invalid_objects(curve, h, embedding, monodromy):
    with pytest.raises(ValueError):
        LocalSystemObject(curve, h, embedding, monodromy)


def test_transform_of_constant(constant):
    complex_ = mellin_transform(constant)

    assert (complex_.lo, complex_.hi) == (-1, 1)
    assert [complex_.rank(d) for d in complex_.degrees()] == [1, 2, 1]


def test_transform_of_skyscraper(curve):
    point = LocalSystemObject.skyscraper(curve, rank=3)
    complex_ = mellin_transform(point)

    assert complex_.ranks == {0: 3}
    assert euler_characteristic(complex_) == 3
    assert point.euler_characteristic() == 3


@pytest.mark.parametrize('values', [
    [1, 1], [-1, 1], [2, 1], ['1/2', 3], [1, -1],
])
def test_base_change_of_unipotent(unipotent, values):
    """ Fibers of the transform equal twisted cohomology. """
    complex_ = mellin_transform(unipotent)
    point = CharacterPoint(values)

    assert derived_fiber(complex_, point) == \
        twisted_cohomology(unipotent, point)


def test_twisted_cohomology_of_unipotent(unipotent):
    assert twisted_cohomology(unipotent, [1, 1]) == {-1: 1, 0: 2, 1: 1}
    assert twisted_cohomology(unipotent, [2, 1]) == {-1: 0, 0: 0, 1: 0}


def test_twist_moves_cohomology(curve):
    obj = LocalSystemObject(curve, 1, IDENTITY, [[[1]], [[1]]],
                            twist=['1/3', 1], shift=1)

    assert twisted_cohomology(obj, [3, 1])[0] == 2
    assert twisted_cohomology(obj, [1, 1])[0] == 0


def test_subvariety_transform(surface):
    embedding = [[1, 0], [0, 1], [0, 0], [0, 0]]
    obj = LocalSystemObject(surface, 1, embedding, [[[1]], [[1]]], shift=1)
    complex_ = mellin_transform(obj)

    assert derived_fiber(complex_, [1, 1, 2, 3]) == {-1: 1, 0: 2, 1: 1}
    assert derived_fiber(complex_, [1, 2, 1, 1]) == {-1: 0, 0: 0, 1: 0}


def test_verdier_dual(curve):
    obj = LocalSystemObject(curve, 1, IDENTITY, [[[2]], [[1]]],
                            twist=[3, 1], shift=1)
    dualized = verdier_dual(obj)

    assert dualized.shift == 1
    assert dualized.monodromy[0] == ((Fraction(1, 2),),)
    assert dualized.twist == CharacterPoint(['1/3', 1])
    assert verdier_dual(dualized) == obj


def test_elementary_complex(curve, surface, constant):
    total = ElementaryComplex(curve, [constant,
                                      LocalSystemObject.skyscraper(curve)])

    assert transform_sum(total).rank(0) == 3
    assert total.twisted_cohomology([1, 1]) == {-1: 1, 0: 3, 1: 1}

    with pytest.raises(TorusMismatch):
        ElementaryComplex(curve, [LocalSystemObject.constant(surface)])


def test_scalar_cone(curve, constant):
    source = ScalarCone(constant, parse_poly('x2 - 1', curve.ring))
    complex_ = source.transform()

    assert source.twisted_cohomology([1, 1]) == \
        {-2: 1, -1: 3, 0: 3, 1: 1}
    assert source.twisted_cohomology([1, 2]) == \
        {-2: 0, -1: 0, 0: 0, 1: 0}
    fiber = derived_fiber(complex_, [1, 1])
    assert dict((k, d) for k, d in fiber.items() if d) == \
        {-2: 1, -1: 3, 0: 3, 1: 1}


def test_scalar_cone_needs_same_torus(surface, constant):
    with pytest.raises(TorusMismatch):
        ScalarCone(constant, parse_poly('x3', surface.ring))


def test_pullback(curve):
    surjection = LatticeSurjection(2, 1, [[1, 0, 0, 0], [0, 1, 0, 0]])
    base = LocalSystemObject(surjection.target, 1, IDENTITY, [[[2]], [[1]]],
                             shift=1)
    pulled = pullback(surjection, base)

    assert pulled.torus.g == 2
    assert pulled.shift == 2
    assert [m[0][0] for m in pulled.monodromy] == [2, 1, 1, 1]
    assert twisted_cohomology(pulled, ['1/2', 1, 1, 1])[0] == 6

    twisted = pullback(surjection, base, [1, 1, -1, 1])
    assert twisted.twist == CharacterPoint([1, 1, -1, 1])

    with pytest.raises(TorusMismatch):
        pullback(surjection, LocalSystemObject.constant(CharacterTorus(2)))


def test_spectrum_coordinates(curve):
    obj = LocalSystemObject(curve, 1, IDENTITY, [[[2]], [[1]]],
                            twist=[1, '-1/3'], shift=1)

    assert spectrum_coordinates(obj) == \
        [Fraction(-3), Fraction(-1, 3), Fraction(1, 2), Fraction(1),
         Fraction(2)]
