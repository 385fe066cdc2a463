import pytest

from charloci.algebra.matrix import PolyMatrix
from charloci.algebra.ideal import Ideal
from charloci.algebra.modules import (FPModule, dual_module,
                                      free_resolution, hom_module,
                                      isomorphic)
from charloci.complexes import cohomology_module
from charloci.exceptions import ResolutionTooLong


@pytest.fixture
def cyclic(ring, p):
    """ Return ``R / (gens)``. """
    return lambda *gens: FPModule.cyclic(Ideal(ring, [p(g) for g in gens]))


def test_zero_module(ring, p):
    assert FPModule(ring, 1, PolyMatrix(ring, 1, 1, [[p('x - 1')]])).\
        is_zero() is False
    assert FPModule(ring, 1, PolyMatrix(ring, 1, 1, [[3]])).is_zero()
    assert FPModule(ring, 0).is_zero()


def test_pruned_removes_unit_relations(ring, p):
    module = FPModule(ring, 2, PolyMatrix(ring, 2, 2, [[1, p('y')],
                                                        [p('x'), p('z')]]))
    pruned = module.pruned()

    assert pruned.n_generators == 1
    assert pruned.relations.entries == ((p('z - x*y'),),)


def test_invariants_of_residue_field(ring, cyclic):
    module = cyclic('x', 'y', 'z')

    assert module.generic_rank() == 0
    assert module.annihilator() == Ideal(ring, module.relations.row(0))
    assert module.fitting_ideal(0) == module.annihilator()
    assert module.fitting_ideal(1).is_unit()


def test_generic_rank(ring, p):
    module = FPModule(ring, 3, PolyMatrix(ring, 3, 1,
                                          [[p('x')], [p('y')], [p('z')]]))
    assert module.generic_rank() == 2


def test_hom_into_free_kills_torsion(ring, cyclic):
    assert dual_module(cyclic('x')).pruned().is_zero()
    assert dual_module(FPModule.free(ring, 2)).generic_rank() == 2


def test_hom_of_residue_fields(cyclic):
    """ Hom(R/(x, y), R/(x, y, z)) is the residue field R/(x, y, z). """
    hom = hom_module(cyclic('x', 'y'), cyclic('x', 'y', 'z')).pruned()

    assert isomorphic(hom, cyclic('x', 'y', 'z'))


def test_isomorphic(cyclic, ring):
    assert isomorphic(cyclic('x', 'y'), cyclic('y', 'x + y'))
    assert not isomorphic(cyclic('x'), cyclic('y'))
    assert not isomorphic(cyclic('x'), FPModule.free(ring, 1))


def test_koszul_resolution(cyclic):
    resolution = free_resolution(cyclic('x', 'y', 'z'))

    assert [resolution.rank(d) for d in range(-3, 1)] == [1, 3, 3, 1]
    for d in range(-3, 0):
        assert cohomology_module(resolution, d).n_generators == 0
    assert isomorphic(cohomology_module(resolution, 0),
                      cyclic('x', 'y', 'z'))


def test_resolution_too_long(cyclic):
    with pytest.raises(ResolutionTooLong):
        free_resolution(cyclic('x', 'y'), max_length=1)
