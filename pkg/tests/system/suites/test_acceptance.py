import pytest

from ..corpus import examples_of_kind
from ..validators import validate_passed

OBJECTS = examples_of_kind('objects')
TRANSFORMS = examples_of_kind('objects', 'complex')


@pytest.mark.parametrize('example', OBJECTS)
def test_base_change(verify, example):
    """ Fibers of the transform equal twisted cohomology at 50 characters.
    """
    validate_passed(*verify('base-change', example, samples=50))


@pytest.mark.parametrize('example', TRANSFORMS)
def test_jump_loci_are_sound(verify, example):
    validate_passed(*verify('loci', example, samples=50, max_m=3))


@pytest.mark.parametrize('example', OBJECTS)
def test_loci_are_unions_of_translated_subtori(verify, example):
    validate_passed(*verify('structure', example))


@pytest.mark.parametrize('example', TRANSFORMS)
def test_codimension_bounds(verify, example):
    validate_passed(*verify('codim', example))


@pytest.mark.parametrize('example', TRANSFORMS)
def test_generic_vanishing_and_euler_characteristic(verify, example):
    validate_passed(*verify('generic-vanishing', example))


@pytest.mark.parametrize('example', TRANSFORMS)
def test_surprise(verify, example):
    validate_passed(*verify('surprise', example))


@pytest.mark.parametrize('example', ['constant_g1', 'twist_torsion',
                                     'koszul_complex'])
def test_exchange_of_truncations_under_duality(verify, example):
    validate_passed(*verify('exchange', example, exchange_size=20))


@pytest.mark.parametrize('example', examples_of_kind('module'))
def test_intersection_complexes(verify, example):
    validate_passed(*verify('ic', example))


@pytest.mark.parametrize('example', ['constant_g1', 'koszul_complex',
                                     'ic_syzygy_n4'])
def test_kernel(verify, example):
    validate_passed(*verify('kernel', example))


@pytest.mark.parametrize('example', TRANSFORMS)
def test_expectations(verify, example):
    validate_passed(*verify('expect', example))
