"""
Polynomial rings over the rationals and their monomial orders.

A ring is described by its variable names and a monomial order. Two orders
are supported, 'lex' and 'grevlex', optionally applied to a permutation of
the variables. A ring can also carry an elimination block: the first `block`
variables are then compared first (by grevlex), and the remaining variables
are only used to break ties. That is the order used to eliminate auxiliary
variables.

Exponent vectors are tuples of non-negative integers. Orders are realized as
key functions: monomial `a` is larger than `b` iff ``key(a) > key(b)``.
"""
from charloci import conf


def _lex_key(exp):
    return exp


def _grevlex_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


_base_keys = {
    'lex': _lex_key,
    'grevlex': _grevlex_key,
}


class PolyRing(object):
    """ Polynomial ring ``Q[x1, ..., xn]``.

    :param var_names: List with distinct variable names.
    :param order: Monomial order, 'lex' or 'grevlex'. Defaults to
        :attr:`Config.MONOMIAL_ORDER`.
    :param permutation: Optional permutation of variable indices; the order
        compares exponents in this variable sequence.
    :param block: Number of leading variables forming an elimination block.
    """
    def __init__(self, var_names, order=None, permutation=None, block=0):
        var_names = tuple(var_names)
        if len(set(var_names)) != len(var_names):
            raise ValueError('Variable names must be distinct: '
                             '{0}.'.format(var_names))

        order = order or conf.MONOMIAL_ORDER
        if order not in _base_keys:
            raise ValueError('Unknown monomial order {0!r}.'.format(order))

        n = len(var_names)
        if permutation is None:
            permutation = tuple(range(n))
        permutation = tuple(permutation)
        if sorted(permutation) != list(range(n)):
            raise ValueError('{0} is not a permutation of the variables.'
                             .format(permutation))

        if not 0 <= block <= n:
            raise ValueError('Elimination block must be between 0 and {0}.'
                             .format(n))

        self.var_names = var_names
        self.num_vars = n
        self.order = order
        self.permutation = permutation
        self.block = block
        self.monomial_key = self._build_key()

    def _build_key(self):
        base = _base_keys[self.order]
        perm = self.permutation
        identity = perm == tuple(range(self.num_vars))
        block = self.block

        if identity and not block:
            return base

        def permuted(exp):
            return tuple(exp[i] for i in perm)

        if not block:
            return lambda exp: base(permuted(exp))

        def key(exp):
            exp = permuted(exp)
            return (_grevlex_key(exp[:block]), base(exp[block:]))

        return key

    @property
    def one_exponent(self):
        return (0,) * self.num_vars

    def variable_index(self, name):
        try:
            return self.var_names.index(name)
        except ValueError:
            raise KeyError('Ring has no variable {0!r}.'.format(name))

    def with_order(self, order, permutation=None):
        """ Return same ring with another monomial order. """
        return PolyRing(self.var_names, order, permutation)

    def with_elimination_variables(self, names):
        """ Return ring with extra variables prepended, ordered so that they
        are eliminated first.

        :param names: Names of the extra variables.
        :return: New :class:`PolyRing`.
        """
        names = tuple(names)
        perm = tuple(range(len(names))) + \
            tuple(len(names) + i for i in self.permutation)
        return PolyRing(names + self.var_names, self.order, perm,
                        block=len(names))

    def fresh_names(self, count, prefix='_t'):
        """ Return `count` variable names not used by this ring. """
        names = []
        i = 0
        while len(names) < count:
            name = '{0}{1}'.format(prefix, i)
            if name not in self.var_names:
                names.append(name)
            i += 1

        return names

    def _identity(self):
        return (self.var_names, self.order, self.permutation, self.block)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and \
            self._identity() == other._identity()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._identity())

    def __repr__(self):
        return 'PolyRing({0}, order={1!r})'.format(list(self.var_names),
                                                   self.order)
