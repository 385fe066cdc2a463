import pytest
from fractions import Fraction

from charloci.algebra.ring import PolyRing
from charloci.algebra.poly import Poly, format_poly, parse_poly
from charloci.exceptions import ParseError, RingMismatch


@pytest.mark.parametrize('text, expected', [
    ('3/2*x^2*y - y + 1', '3/2*x^2*y - y + 1'),
    ('1 + x', 'x + 1'),
    ('y*x', 'x*y'),
    ('-x - x', '-2*x'),
    ('x - x', '0'),
    ('2*3*z', '6*z'),
])
def test_parse_and_format(ring, text, expected):
    assert format_poly(parse_poly(text, ring)) == expected


@pytest.mark.parametrize('text, column', [
    ('x + $', 5),
    ('x + w', 5),
    ('x +', 4),
    ('1/0', 1),
])
def test_parse_error_column(ring, text, column):
    """ Errors report the 1-based column of the offending token. """
    with pytest.raises(ParseError) as excinfo:
        parse_poly(text, ring)

    assert excinfo.value.column == column


def test_parse_empty(ring):
    with pytest.raises(ParseError):
        parse_poly('  ', ring)


def test_arithmetic(p):
    assert (p('x + 1') * p('x - 1')) == p('x^2 - 1')
    assert p('x') + 1 == p('x + 1')
    assert 1 - p('x') == p('1 - x')
    assert p('x + y') ** 3 == p('x^3 + 3*x^2*y + 3*x*y^2 + y^3')
    assert 2 * p('x') == p('2*x')


def test_exact_divide(p):
    assert p('x^2 - 1').exact_divide(p('x - 1')) == p('x + 1')

    with pytest.raises(ValueError):
        p('x^2 + 1').exact_divide(p('x - 1'))


def test_evaluate(p):
    assert p('x*y - 3*z').evaluate([2, Fraction(1, 2), 1]) == -2
    assert p('x - 1').vanishes_at([1, 5, 7])


@pytest.mark.parametrize('order, leading', [
    ('lex', (1, 0, 0)),
    ('grevlex', (0, 2, 0)),
])
def test_leading_term_depends_on_order(order, leading):
    ring = PolyRing(['x', 'y', 'z'], order)
    exp, coef = parse_poly('x + 2*y^2', ring).leading_term()

    assert exp == leading


def test_monic_and_degree(p):
    assert p('2*x^2 + 4').monic() == p('x^2 + 2')
    assert p('x^2*y + z').degree() == 3
    assert Poly.zero(p('x').ring).degree() == -1


def test_ring_mismatch(ring, plane):
    with pytest.raises(RingMismatch):
        Poly.variable(ring, 0) + Poly.variable(plane, 0)


def test_as_sympy(p):
    from sympy import Rational, symbols, expand

    x, y, z = symbols('x y z')
    assert expand(p('3/2*x^2*y - z + 1').as_sympy((x, y, z)) -
                  (Rational(3, 2) * x ** 2 * y - z + 1)) == 0
