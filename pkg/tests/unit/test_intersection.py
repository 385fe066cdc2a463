import pytest

from charloci.algebra.ideal import Ideal
from charloci.algebra.matrix import PolyMatrix
from charloci.algebra.modules import FPModule, isomorphic
from charloci.algebra.poly import parse_poly
from charloci.algebra.ring import PolyRing
from charloci.complexes import cohomology_module, shift
from charloci.exceptions import NotReflexive, PreconditionFailed
from charloci.intersection import (ICInput, b_bound, delta_amplitude_violations,
                                   ell, ic_sequence, ic_verify,
                                   intersection_complex, is_reflexive,
                                   is_torsion_free, no_small_subobjects,
                                   reconstruct, reflexive_hull)


@pytest.fixture
def free(ring):
    return FPModule.free(ring, 2)


@pytest.fixture
def syzygy(ring, p):
    """ Cokernel of ``R -> R^3`` given by ``(x, y, z)``, a second syzygy of
    the residue field.
    """
    return FPModule(ring, 3, PolyMatrix(ring, 3, 1,
                                        [[p('x')], [p('y')], [p('z')]]))


@pytest.fixture
def maximal(plane):
    """ The ideal ``(x, y)`` of the plane, torsion free but not reflexive.
    """
    x, y = [parse_poly(v, plane) for v in ['x', 'y']]
    return FPModule(plane, 2, PolyMatrix(plane, 2, 1, [[y], [-x]]))


@pytest.fixture
def residue_field(ring, p):
    return FPModule.cyclic(Ideal(ring, [p('x'), p('y'), p('z')]))


@pytest.mark.parametrize('n, expected', [
    (0, 1), (1, 1), (2, 1), (3, 1), (4, 3), (5, 3), (7, 3), (8, 5),
])
def test_ell(n, expected):
    assert ell(n) == expected


@pytest.mark.parametrize('n, expected', [(1, 0), (2, 0), (3, 1), (4, 1),
                                         (5, 2)])
def test_b_bound(n, expected):
    assert b_bound(n) == expected


def test_ell_of_negative_dimension():
    with pytest.raises(ValueError):
        ell(-1)


def test_reflexivity(free, syzygy, maximal, residue_field):
    assert is_reflexive(free) and is_torsion_free(free)
    assert is_reflexive(syzygy) and is_torsion_free(syzygy)
    assert is_torsion_free(maximal)
    assert not is_reflexive(maximal)
    assert not is_torsion_free(residue_field)
    assert not is_reflexive(residue_field)


def test_reflexive_hull(plane, maximal, residue_field):
    assert isomorphic(reflexive_hull(maximal), FPModule.free(plane, 1))
    assert reflexive_hull(residue_field).is_zero()


def test_intersection_complex_of_free_module(free):
    ic = intersection_complex(ICInput(free))

    assert isomorphic(cohomology_module(ic, 0), free)
    assert all(cohomology_module(ic, d).is_zero()
               for d in ic.degrees() if d != 0)


def test_intersection_complex_needs_reflexive(maximal):
    with pytest.raises(NotReflexive):
        intersection_complex(ICInput(maximal))


@pytest.mark.parametrize('value', [2, -1])
def test_ell_override_must_be_odd_and_large(free, value):
    with pytest.raises(ValueError):
        intersection_complex(ICInput(free), ell_override=value)


def test_sequence_starts_with_dual_then_module(syzygy):
    sequence = ic_sequence(ICInput(syzygy), 3)

    assert len(sequence) == 4
    assert isomorphic(cohomology_module(sequence[1], 0), syzygy)
    assert delta_amplitude_violations(sequence, 3) == []

    with pytest.raises(ValueError):
        ic_sequence(ICInput(syzygy), -1)


@pytest.mark.parametrize('fixture', ['free', 'syzygy'])
def test_ic_verify(request, residue_field, fixture):
    module = request.getfixturevalue(fixture)
    report = ic_verify(ICInput(module), torsion=[residue_field],
                       reconstruction=True)

    assert report['error'] is None
    assert report['h0_matches']
    assert report['m_perverse']
    assert report['stable_under_ell_increase']
    assert report['dual_h0_matches']
    assert report['amplitude_violations'] == []
    assert report['no_small_subobjects'] is True
    assert report['reconstructs'] is True
    assert report['passed']


def test_ic_verify_dual_bounds_of_syzygy(syzygy):
    """ The dual carries the residue field in degree 1, of codimension 3. """
    report = ic_verify(ICInput(syzygy))

    assert report['codim_bounds'] == []
    assert report['dual_codim_bounds'] == [
        {'i': 1, 'codim': 3, 'required': 3}]


def test_ic_verify_reports_failure(maximal):
    report = ic_verify(ICInput(maximal))

    assert not report['passed']
    assert report['error'].startswith('NotReflexive')


def test_ic_in_torus_mode():
    ring = PolyRing(['t1', 't2'], 'grevlex')
    inp = ICInput(FPModule.free(ring, 1), torus_mode=True)

    assert inp.torus is not None
    assert ic_verify(inp)['passed']


def test_reconstruct_shifted_complex_disagrees(free):
    ic = intersection_complex(ICInput(free))

    assert reconstruct(ic).agrees
    assert not reconstruct(shift(ic, -1)).agrees


def test_no_small_subobjects(free, residue_field):
    ic = intersection_complex(ICInput(free))

    assert no_small_subobjects(ic, residue_field)
    with pytest.raises(PreconditionFailed):
        no_small_subobjects(ic, free)
