"""
Sparse multivariate polynomials with rational coefficients.

A :class:`Poly` maps exponent vectors to non-zero :class:`fractions.Fraction`
coefficients. Polynomials are immutable; all arithmetic returns new objects.

Polynomials are read and written in a small text grammar: terms are joined
by ``+`` and ``-``, a term is a product of factors separated by ``*`` and a
factor is a decimal rational (``3`` or ``3/4``) or a variable with optional
exponent (``x1^3``). Whitespace is ignored::

    >>> ring = PolyRing(['x1', 'x2'])
    >>> p = parse_poly('3/2*x1^2*x2 - x2 + 1', ring)
    >>> format_poly(p)
    '3/2*x1^2*x2 - x2 + 1'

"""
import re
from fractions import Fraction

from charloci.exceptions import ParseError, RingMismatch
from charloci.utils import format_fraction


class Poly(object):
    """ Polynomial in a :class:`charloci.algebra.ring.PolyRing`.

    :param ring: The ring.
    :param terms: Dict mapping exponent tuples to coefficients. Zero
        coefficients are dropped.
    """
    __slots__ = ('ring', 'terms', '_hash')

    def __init__(self, ring, terms=None):
        self.ring = ring
        clean = {}
        for exp, coef in (terms or {}).items():
            if coef:
                clean[tuple(exp)] = Fraction(coef)
        self.terms = clean
        self._hash = None

    @classmethod
    def constant(cls, ring, value):
        return cls(ring, {ring.one_exponent: value})

    @classmethod
    def variable(cls, ring, index):
        exp = [0] * ring.num_vars
        exp[index] = 1
        return cls(ring, {tuple(exp): 1})

    @classmethod
    def monomial(cls, ring, exp, coef=1):
        return cls(ring, {tuple(exp): coef})

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch('{0!r} and {1!r} differ.'.format(self.ring,
                                                               other.ring))

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other

        return Poly.constant(self.ring, Fraction(other))

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(exp) for exp in self.terms)

    def constant_value(self):
        """ Return constant coefficient. """
        return self.terms.get(self.ring.one_exponent, Fraction(0))

    def degree(self):
        """ Return total degree, -1 for the zero polynomial. """
        return max((sum(exp) for exp in self.terms), default=-1)

    def leading_term(self):
        """ Return tuple (exponent, coefficient) of the leading term under the
        ring's monomial order.

        :raises ValueError: For the zero polynomial.
        """
        if not self.terms:
            raise ValueError('Zero polynomial has no leading term.')

        exp = max(self.terms, key=self.ring.monomial_key)
        return exp, self.terms[exp]

    def sorted_terms(self):
        """ Return list of (exponent, coefficient), largest term first. """
        return sorted(self.terms.items(),
                      key=lambda t: self.ring.monomial_key(t[0]),
                      reverse=True)

    def monic(self):
        if not self.terms:
            return self

        return self * (1 / self.leading_term()[1])

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            terms[exp] = terms.get(exp, 0) + coef
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, dict((e, -c) for e, c in self.terms.items()))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            other = Fraction(other)
            return Poly(self.ring,
                        dict((e, c * other) for e, c in self.terms.items()))

        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError('Negative powers of polynomials are undefined.')

        result = Poly.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_divide(self, divisor):
        """ Return quotient of exact division by `divisor`.

        :param divisor: Non-zero :class:`Poly`.
        :return: Quotient.
        :raises ValueError: When the division leaves a remainder.
        """
        self._check(divisor)
        key = self.ring.monomial_key
        lt, lc = divisor.leading_term()
        rest = dict(self.terms)
        quotient = {}
        while rest:
            exp = max(rest, key=key)
            if any(a < b for a, b in zip(exp, lt)):
                raise ValueError('{0} is not divisible by {1}.'
                                 .format(self, divisor))
            shift = tuple(a - b for a, b in zip(exp, lt))
            q = rest[exp] / lc
            quotient[shift] = q
            for e, c in divisor.terms.items():
                t = tuple(a + b for a, b in zip(e, shift))
                v = rest.get(t, 0) - q * c
                if v:
                    rest[t] = v
                else:
                    rest.pop(t, None)
        return Poly(self.ring, quotient)

    def evaluate(self, point):
        """ Evaluate at a point with rational coordinates.

        Negative exponents are allowed, so Laurent monomials produced by
        substitutions can be evaluated at points with non-zero coordinates.
        """
        total = Fraction(0)
        for exp, coef in self.terms.items():
            value = coef
            for x, e in zip(point, exp):
                if e:
                    value *= Fraction(x) ** e
            total += value
        return total

    def vanishes_at(self, point):
        return self.evaluate(point) == 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms

        try:
            return self.is_constant() and \
                self.constant_value() == Fraction(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return 'Poly({0!r})'.format(format_poly(self))

    def as_sympy(self, symbols):
        """ Return polynomial as sympy expression in given symbols. """
        from sympy import Rational, Mul, Add

        terms = []
        for exp, coef in self.terms.items():
            factors = [Rational(coef.numerator, coef.denominator)]
            factors.extend(s ** e for s, e in zip(symbols, exp) if e)
            terms.append(Mul(*factors))
        return Add(*terms)


def format_poly(p):
    """ Return text representation of a polynomial, terms ordered from large
    to small.
    """
    if p.is_zero():
        return '0'

    names = p.ring.var_names
    parts = []
    for i, (exp, coef) in enumerate(p.sorted_terms()):
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append('{0}^{1}'.format(name, e))

        sign = '-' if coef < 0 else '+'
        magnitude = abs(coef)
        if not factors:
            body = format_fraction(magnitude)
        elif magnitude == 1:
            body = '*'.join(factors)
        else:
            body = '*'.join([format_fraction(magnitude)] + factors)

        if i == 0:
            parts.append(body if sign == '+' else '-' + body)
        else:
            parts.append('{0} {1}'.format(sign, body))

    return ' '.join(parts)


_token = re.compile(r'\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)'
                    r'|(?P<op>[-+*^]))')


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        match = _token.match(text, pos)
        if match is None:
            column = pos + 1
            while column <= len(text) and text[column - 1].isspace():
                column += 1
            raise ParseError('Unexpected character {0!r} in polynomial.'
                             .format(text[column - 1]), 1, column)

        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()
    return tokens


def parse_poly(text, ring):
    """ Parse polynomial from text.

    :param text: String following the polynomial grammar.
    :param ring: :class:`PolyRing` declaring the variable names.
    :return: :class:`Poly`.
    :raises ParseError: With 1-based column of the offending token.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError('Empty polynomial.', 1, 1)

    position = [0]

    def peek():
        if position[0] < len(tokens):
            return tokens[position[0]]
        return (None, None, len(text) + 1)

    def take():
        token = peek()
        position[0] += 1
        return token

    def factor():
        kind, value, column = take()
        if kind == 'number':
            if '/' in value:
                num, den = value.split('/')
                if int(den) == 0:
                    raise ParseError('Zero denominator.', 1, column)
            return Poly.constant(ring, Fraction(value))

        if kind == 'name':
            try:
                index = ring.variable_index(value)
            except KeyError:
                raise ParseError('Unknown variable {0!r}.'.format(value), 1,
                                 column)
            power = 1
            if peek()[0] == 'op' and peek()[1] == '^':
                take()
                kind, value, column = take()
                if kind != 'number' or '/' in value:
                    raise ParseError('Exponent must be a non-negative '
                                     'integer.', 1, column)
                power = int(value)
            exp = [0] * ring.num_vars
            exp[index] = power
            return Poly.monomial(ring, exp)

        raise ParseError('Expected number or variable.', 1, column)

    def term():
        result = factor()
        while peek()[0] == 'op' and peek()[1] == '*':
            take()
            result = result * factor()
        return result

    total = Poly.zero(ring)
    sign = 1
    if peek()[0] == 'op' and peek()[1] in '+-':
        sign = -1 if take()[1] == '-' else 1

    total = total + term() * sign
    while position[0] < len(tokens):
        kind, value, column = take()
        if kind != 'op' or value not in '+-':
            raise ParseError('Expected + or -.', 1, column)
        sign = -1 if value == '-' else 1
        total = total + term() * sign

    return total
