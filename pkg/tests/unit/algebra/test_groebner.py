import pytest

from sympy import groebner, symbols

from charloci.algebra.ring import PolyRing
from charloci.algebra.poly import parse_poly
from charloci.algebra.matrix import PolyMatrix
from charloci.algebra.groebner import (groebner_basis, lift,
                                       minimal_generators,
                                       module_groebner_basis, normal_form,
                                       syzygies)


def matrix(ring, rows):
    return PolyMatrix(ring, len(rows), len(rows[0]),
                      [[parse_poly(e, ring) for e in row] for row in rows])


@pytest.mark.parametrize('gens', [
    ['x*y - 1', 'x - 1'],
    ['x^2 - y', 'x*y - z', 'y^2 - x*z'],
    ['x^2 + y^2 + z^2 - 1', 'x - y', 'z'],
    ['x^3 - 2*x*y', 'x^2*y - 2*y^2 + x'],
])
@pytest.mark.parametrize('order', ['lex', 'grevlex'])
def test_groebner_basis_against_sympy(gens, order):
    """ Reduced bases generate the same ideal as sympy's and have the same
    size.
    """
    ring = PolyRing(['x', 'y', 'z'], order)
    ours = groebner_basis([parse_poly(g, ring) for g in gens])

    x, y, z = symbols('x y z')
    theirs = groebner([parse_poly(g, ring).as_sympy((x, y, z)) for g in gens],
                      x, y, z, order=order, domain='QQ')

    assert len(ours) == len(theirs.exprs)
    assert all(theirs.contains(g.as_sympy((x, y, z))) for g in ours)


def test_groebner_basis_is_monic(ring):
    basis = groebner_basis([parse_poly('2*x*y - 2', ring),
                            parse_poly('3*x - 3', ring)])

    assert set(basis) == set([parse_poly('x - 1', ring),
                              parse_poly('y - 1', ring)])


def test_normal_form(p):
    basis = groebner_basis([p('x - 1'), p('y - 2')])

    assert normal_form(p('x^2*y'), basis) == 2
    assert normal_form(p('x*y - 2'), basis).is_zero()


def test_syzygies(ring):
    m = matrix(ring, [['x', 'y', 'z']])
    syz = syzygies(m)

    assert syz.rows == 3
    assert syz.cols == 3
    assert (m * syz).is_zero()


def test_syzygies_of_injective_map(ring):
    m = matrix(ring, [['x'], ['y']])

    assert syzygies(m).cols == 0


def test_lift(ring):
    m = matrix(ring, [['x', 'y']])
    target = [parse_poly('x*y + y^2', ring)]

    coefficients = lift(target, m)
    combination = m * PolyMatrix(ring, 2, 1, [[c] for c in coefficients])
    assert combination.entries[0][0] == target[0]

    assert lift([parse_poly('1', ring)], m) is None


def test_minimal_generators(ring):
    x, y = parse_poly('x', ring), parse_poly('y', ring)
    kept = minimal_generators(ring, 1, [[x], [y], [x * y], [x + y]])

    assert len(kept) == 2


def test_module_basis_satisfies_buchberger(ring):
    m = matrix(ring, [['x', 'y', '0'], ['y', '0', 'z']])

    assert module_groebner_basis(m).satisfies_buchberger_criterion()
