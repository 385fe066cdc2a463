import pytest

from charloci.complexes import koszul_complex, shift
from charloci.exceptions import PreconditionFailed
from charloci.perversity import (SupportingFunction, dual_function,
                                 heart_shape, in_geq, in_leq, is_m_perverse,
                                 is_valid_pair, make_m, make_m_hat,
                                 perversity_report, standard_bounds,
                                 surprise_diagnostics, zero_function)
from charloci.transform import LocalSystemObject, mellin_transform


@pytest.fixture
def origin(ring, p):
    return koszul_complex(ring, [p('x'), p('y'), p('z')])


@pytest.fixture
def constant(curve):
    return mellin_transform(LocalSystemObject.constant(curve))


def test_supporting_functions():
    assert make_m(4).values == (0, 0, 1, 1, 2)
    assert make_m_hat(4).values == (0, 1, 1, 2, 2)
    assert dual_function(make_m(4)) == make_m_hat(4)
    assert dual_function(make_m_hat(5)) == make_m(5)
    assert zero_function(2) == SupportingFunction([0, 0, 0])


@pytest.mark.parametrize('values, valid', [
    ([0, 0, 1, 1], True),
    ([0, 0, 0, 0], True),
    ([0, 1, 2, 3], True),
    ([0, 2, 2, 2], False),
    ([1, 0, 0, 0], False),
])
def test_is_valid_pair(values, valid):
    assert is_valid_pair(SupportingFunction(values)) is valid


def test_function_must_fit_ring(origin):
    with pytest.raises(ValueError):
        in_leq(origin, 0, make_m(2))
    with pytest.raises(ValueError):
        in_leq(origin, 0, SupportingFunction([0, 2, 2, 2]))


@pytest.mark.parametrize('k, expected', [
    (1, False),
    (2, True),
    (3, True),
])
def test_in_leq(origin, k, expected):
    """ The residue field in degree 3 has support of codimension 3, and
    m(3) = 1.
    """
    assert in_leq(origin, k, make_m(3)) is expected


def test_in_geq(origin):
    # The dual has the residue field in degree 0, and m_hat(3) = 2
    assert in_geq(origin, 2, make_m(3))
    assert not in_geq(origin, 3, make_m(3))


def test_standard_bounds(origin):
    assert standard_bounds(origin)
    assert standard_bounds(shift(origin, 2))


def test_constant_is_perverse(curve, constant):
    assert is_m_perverse(constant, curve)
    assert not is_m_perverse(shift(constant, 1), curve)
    assert not is_m_perverse(shift(constant, -1), curve)


def test_surprise_diagnostics(curve, constant):
    report = surprise_diagnostics(constant, curve)

    assert report.r == 1
    assert report.codim == 2
    assert report.holds
    assert report.equi_certified
    assert len(report.subtori) == 1


def test_surprise_needs_both_bounds(curve, constant):
    with pytest.raises(PreconditionFailed):
        surprise_diagnostics(shift(constant, -1), curve)


def test_heart_shape(curve, constant):
    assert heart_shape(constant, 1, curve)
    assert not heart_shape(shift(constant, -1), 1, curve)


def test_perversity_report(curve, constant):
    report = perversity_report(constant, curve, 1)

    assert report['leq'] and report['geq'] and report['heart']
    assert {'degree': 1, 'codim': 2} in report['profile']
    assert report['surprise'] == {'r': 1, 'codim': 2,
                                  'equi_certified': True}


def test_perversity_report_without_surprise(curve, constant):
    report = perversity_report(shift(constant, -1), curve)

    assert not report['leq']
    assert 'surprise' not in report
