"""
Dense matrices of polynomials.

Columns play the role of elements of a free module: a matrix with `r` rows
and `s` columns is a map ``R^s -> R^r``, and its columns generate a
submodule of ``R^r``. Matrices with zero rows or zero columns are valid and
keep track of their shape.
"""
from fractions import Fraction

from charloci.algebra.poly import Poly
from charloci.exceptions import RingMismatch


class PolyMatrix(object):
    """ Immutable matrix with :class:`Poly` entries.

    :param ring: The ring of all entries.
    :param rows: Number of rows.
    :param cols: Number of columns.
    :param entries: List of rows, each a list of polynomials (or rationals).
        Omit for a zero matrix.
    """
    __slots__ = ('ring', 'rows', 'cols', 'entries')

    def __init__(self, ring, rows, cols, entries=None):
        self.ring = ring
        self.rows = rows
        self.cols = cols
        if entries is None:
            zero = Poly.zero(ring)
            entries = [[zero] * cols for _ in range(rows)]

        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ValueError('Entries do not form a {0}x{1} matrix.'
                             .format(rows, cols))

        self.entries = tuple(tuple(_coerce(ring, e) for e in row)
                             for row in entries)

    @classmethod
    def zero(cls, ring, rows, cols):
        return cls(ring, rows, cols)

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, n, n, [[1 if i == j else 0 for j in range(n)]
                                for i in range(n)])

    @classmethod
    def from_columns(cls, ring, rows, columns):
        """ Create matrix from list of columns, each a list of `rows`
        entries.
        """
        columns = list(columns)
        return cls(ring, rows, len(columns),
                   [[col[i] for col in columns] for i in range(rows)])

    @classmethod
    def diagonal_blocks(cls, blocks):
        """ Return block diagonal matrix. """
        ring = blocks[0].ring
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        result = cls(ring, rows, cols)
        entries = [list(row) for row in result.entries]
        r = c = 0
        for block in blocks:
            for i in range(block.rows):
                for j in range(block.cols):
                    entries[r + i][c + j] = block.entries[i][j]
            r += block.rows
            c += block.cols
        return cls(ring, rows, cols, entries)

    def entry(self, i, j):
        return self.entries[i][j]

    def row(self, i):
        return list(self.entries[i])

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch('{0!r} and {1!r} differ.'.format(self.ring,
                                                               other.ring))

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError('Shapes {0} and {1} differ.'.format(self.shape,
                                                                 other.shape))
        return PolyMatrix(self.ring, self.rows, self.cols,
                          [[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return self.scale(other)

        self._check(other)
        if self.cols != other.rows:
            raise ValueError('Cannot multiply {0} by {1} matrix.'
                             .format(self.shape, other.shape))

        zero = Poly.zero(self.ring)
        entries = []
        for row in self.entries:
            new_row = []
            for j in range(other.cols):
                total = zero
                for k, a in enumerate(row):
                    if a.terms:
                        b = other.entries[k][j]
                        if b.terms:
                            total = total + a * b
                new_row.append(total)
            entries.append(new_row)
        return PolyMatrix(self.ring, self.rows, other.cols, entries)

    def scale(self, factor):
        return PolyMatrix(self.ring, self.rows, self.cols,
                          [[e * factor for e in row] for row in self.entries])

    def transpose(self):
        return PolyMatrix(self.ring, self.cols, self.rows,
                          [list(col) for col in zip(*self.entries)]
                          if self.rows else [[] for _ in range(self.cols)])

    def hstack(self, *others):
        result = self
        for other in others:
            result._check(other)
            if other.rows != result.rows:
                raise ValueError('Row counts differ.')
            result = PolyMatrix(self.ring, result.rows,
                                result.cols + other.cols,
                                [list(a) + list(b) for a, b in
                                 zip(result.entries, other.entries)])
        return result

    def vstack(self, *others):
        result = self
        for other in others:
            result._check(other)
            if other.cols != result.cols:
                raise ValueError('Column counts differ.')
            result = PolyMatrix(self.ring, result.rows + other.rows,
                                result.cols,
                                list(result.entries) + list(other.entries))
        return result

    def submatrix(self, rows, cols):
        rows = list(rows)
        cols = list(cols)
        return PolyMatrix(self.ring, len(rows), len(cols),
                          [[self.entries[i][j] for j in cols] for i in rows])

    def map_entries(self, fn, ring=None):
        ring = ring or self.ring
        return PolyMatrix(ring, self.rows, self.cols,
                          [[fn(e) for e in row] for row in self.entries])

    def evaluate(self, point):
        """ Return list of rows with entries evaluated at a rational point. """
        return [[e.evaluate(point) for e in row] for row in self.entries]

    def max_degree(self):
        return max((e.degree() for row in self.entries for e in row),
                   default=-1)

    def determinant(self):
        """ Return determinant by Laplace expansion along the first row. """
        if self.rows != self.cols:
            raise ValueError('Determinant of non-square matrix.')

        return _determinant(self.entries, tuple(range(self.rows)),
                            tuple(range(self.cols)), {}, self.ring)

    def minors(self, t):
        """ Return list with all t x t minors.

        Sub-determinants are shared between minors through a cache keyed by
        row and column index tuples.
        """
        from itertools import combinations

        if t == 0:
            return [Poly.constant(self.ring, 1)]

        if t > min(self.rows, self.cols):
            return []

        cache = {}
        result = []
        for rows in combinations(range(self.rows), t):
            for cols in combinations(range(self.cols), t):
                result.append(_determinant(self.entries, rows, cols, cache,
                                           self.ring))
        return result

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.ring == other.ring \
            and self.shape == other.shape and self.entries == other.entries

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ring, self.shape, self.entries))

    def __repr__(self):
        return 'PolyMatrix({0}x{1}, {2})'.format(
            self.rows, self.cols,
            [[str(e) for e in row] for row in self.entries])


def _coerce(ring, value):
    if isinstance(value, Poly):
        if value.ring != ring:
            raise RingMismatch('Entry {0!r} is not in {1!r}.'.format(value,
                                                                    ring))
        return value

    return Poly.constant(ring, Fraction(value))


def _determinant(entries, rows, cols, cache, ring):
    key = (rows, cols)
    if key in cache:
        return cache[key]

    if len(rows) == 1:
        value = entries[rows[0]][cols[0]]
    else:
        value = Poly.zero(ring)
        first, rest = rows[0], rows[1:]
        for k, col in enumerate(cols):
            a = entries[first][col]
            if a.is_zero():
                continue
            minor = _determinant(entries, rest, cols[:k] + cols[k + 1:],
                                 cache, ring)
            if minor.is_zero():
                continue
            term = a * minor
            value = value - term if k % 2 else value + term

    cache[key] = value
    return value


def rational_rank(rows, n_rows, n_cols):
    """ Return rank of a matrix with rational entries, computed exactly.

    :param rows: List of rows with :class:`Fraction` entries.
    :param n_rows: Number of rows; needed when `rows` is empty.
    :param n_cols: Number of columns.
    """
    if n_rows == 0 or n_cols == 0:
        return 0

    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    values = [[QQ(v.numerator, v.denominator) for v in row] for row in rows]
    return DomainMatrix(values, (n_rows, n_cols), QQ).rank()
