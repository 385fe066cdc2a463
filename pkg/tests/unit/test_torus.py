import random
import pytest
from fractions import Fraction

from sympy import Matrix

from charloci import conf
from charloci.algebra.ideal import Ideal
from charloci.algebra.poly import parse_poly
from charloci.torus import (CharacterPoint, CharacterTorus,
                            LatticeSurjection, MonomialMap,
                            TranslatedSubtorus, UnitModel, invariant_factors,
                            is_primitive, kernel_basis, linear_subvariety,
                            restriction_substitution, row_hermite_form,
                            sample_points, saturate_at_units,
                            smith_decomposition, subtorus_ideal,
                            torsion_check)
from charloci.exceptions import NotSurjective, TorusMismatch, ZeroValue


def test_torus_ring(surface):
    assert surface.ring.var_names == ('x1', 'x2', 'x3', 'x4')
    assert surface.n == 4
    assert surface.trivial_point() == CharacterPoint([1, 1, 1, 1])


def test_negative_dimension():
    with pytest.raises(ValueError):
        CharacterTorus(-1)


def test_point_group_law():
    a = CharacterPoint(['2', '-1/3'])
    b = CharacterPoint([Fraction(1, 2), 3])

    assert a * b == CharacterPoint([1, -1])
    assert a.inverse() == CharacterPoint(['1/2', -3])
    assert a.value((2, -1)) == -12
    assert str(a) == '(2, -1/3)'


def test_point_rejects_zero():
    with pytest.raises(ZeroValue):
        CharacterPoint([1, 0])


def test_point_must_fit_torus(curve):
    with pytest.raises(TorusMismatch):
        curve.point([1, 1, 1])


@pytest.mark.parametrize('values, max_order, torsion', [
    ([1, -1], None, True),
    ([2, 1], None, False),
    (['-1', 1], 1, False),
])
def test_is_torsion(values, max_order, torsion):
    assert CharacterPoint(values).is_torsion(max_order) is torsion


def test_sampling_is_seeded():
    first = sample_points(4, 10, seed=3)
    second = sample_points(4, 10, seed=3)

    assert first == second
    assert all(len(p) == 4 for p in first)


def test_sample_draws_extra_values():
    rng = random.Random(1)
    points = [CharacterPoint.sample(1, rng, ['7/11']) for _ in range(200)]

    assert CharacterPoint(['7/11']) in points


def test_maximal_ideal(curve):
    ideal = curve.maximal_ideal(['2', '1/2'])

    assert ideal.vanishes_at([2, Fraction(1, 2)])
    assert not ideal.vanishes_at([2, 2])


def test_saturate_at_units(curve):
    p = lambda text: parse_poly(text, curve.ring)
    ideal = Ideal(curve.ring, [p('x1*x2 - x1'), p('x1^2*x2')])

    # x1 = 0 lies outside the torus
    assert saturate_at_units(ideal, curve).is_unit()
    assert curve.saturate_at_units(Ideal(curve.ring, [p('x1^3*x2 - x1^3')]))\
        == Ideal(curve.ring, [p('x2 - 1')])


def test_unit_model_accepts_any_ring(plane):
    model = UnitModel(plane)

    assert model.n == 2
    assert model.point([3, 4]) == CharacterPoint([3, 4])
    assert model != CharacterTorus(1)


def test_subtorus_contains(surface):
    subtorus = TranslatedSubtorus(surface, [(1, 0, 0, 0), (0, 1, 0, 0)],
                                  ['-1', 2])

    assert subtorus.codimension == 2
    assert subtorus.dimension == 2
    assert subtorus.contains(surface.point([-1, 2, 5, 7]))
    assert not subtorus.contains(surface.point([1, 2, 5, 7]))


def test_subtorus_equality_after_normalization(curve):
    first = TranslatedSubtorus(curve, [(1, 1), (0, 1)], [6, 3])
    second = TranslatedSubtorus(curve, [(1, 0), (0, 1)], [2, 3])

    assert first == second
    assert hash(first) == hash(second)


def test_subtorus_rejects_dependent_basis(curve):
    with pytest.raises(ValueError):
        TranslatedSubtorus(curve, [(1, 1), (2, 2)], [1, 1])


def test_subtorus_ideal(curve):
    subtorus = TranslatedSubtorus(curve, [(1, -1)], [2])
    ideal = subtorus_ideal(subtorus)

    assert ideal == Ideal(curve.ring, [parse_poly('x1 - 2*x2', curve.ring)])
    assert TranslatedSubtorus(curve, [], []).ideal().is_zero()


def test_torsion_check(curve):
    assert torsion_check(TranslatedSubtorus(curve, [(1, 0)], [-1]))
    assert not torsion_check(TranslatedSubtorus(curve, [(1, 0)], [2]))

    conf.MAX_TORSION_ORDER = 1
    assert not torsion_check(TranslatedSubtorus(curve, [(1, 0)], [-1]))


def test_primitive(curve):
    assert is_primitive(TranslatedSubtorus(curve, [(1, 0)], [1]))
    assert not is_primitive(TranslatedSubtorus(curve, [(2, 0)], [1]))


@pytest.mark.parametrize('matrix', [
    [[2, 4], [6, 8]],
    [[1, 2, 3], [4, 5, 6]],
    [[0, 0], [0, 3]],
    [[4, 0, 0], [0, 6, 0]],
])
def test_smith_decomposition(matrix):
    form, left, right = smith_decomposition(matrix)

    assert left * Matrix(matrix) * right == form
    assert abs(left.det()) == 1
    assert abs(right.det()) == 1
    diagonal = [form[k, k] for k in range(min(form.shape))]
    assert all(d >= 0 for d in diagonal)
    assert [abs(int(d)) for d in diagonal if d] == invariant_factors(matrix)


def test_row_hermite_form():
    form, transform = row_hermite_form([(2, 4), (1, 3)])

    assert form == [(1, 1), (0, 2)]
    assert Matrix(transform) * Matrix([[2, 4], [1, 3]]) == Matrix(form)


def test_kernel_basis():
    basis = kernel_basis([[1, 1, 0, 0]])

    assert len(basis) == 3
    assert all(b[0] + b[1] == 0 for b in basis)
    assert invariant_factors(basis) == [1, 1, 1]


def test_lattice_surjection():
    surjection = LatticeSurjection(2, 1, [[1, 0, 0, 0], [0, 1, 0, 0]])

    assert surjection.image((3, 4, 5, 6)) == (3, 4)
    assert surjection.column(0) == (1, 0)

    with pytest.raises(NotSurjective):
        LatticeSurjection(1, 1, [[2, 0], [0, 1]])


def test_monomial_map(curve, plane):
    mapping = MonomialMap(curve.ring, plane, [(1, -1), (0, 1)], [2, 1])
    p = parse_poly('x1*x2 - 1', curve.ring)

    q, shift = mapping.apply(p)
    assert shift == (0, 0)
    assert q == parse_poly('2*x - 1', plane)


def test_restriction_substitution():
    surjection = LatticeSurjection(2, 1, [[1, 0, 1, 0], [0, 1, 0, 0]])
    mapping = restriction_substitution(surjection)

    image = mapping(parse_poly('x1*x3 - 1', surjection.source.ring))
    assert image == parse_poly('y1^2 - 1', surjection.target.ring)


def test_linear_subvariety():
    surjection = LatticeSurjection(2, 1, [[1, 0, 0, 0], [0, 1, 0, 0]])
    subtorus = linear_subvariety(surjection, [1, 1, 2, 3])

    assert subtorus.codimension == 2
    assert subtorus.contains(surjection.source.point([5, 7, 2, 3]))
    assert not subtorus.contains(surjection.source.point([5, 7, 1, 3]))
