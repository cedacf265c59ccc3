'''Exact linear maps between tensor powers of finite-dimensional spaces.'''

# Copyright (c) 2026 The homhopf developers.

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

__author__ = 'The homhopf developers'

import functools
import itertools
from fractions import Fraction
from math import gcd

from ._types import is_integer, is_string

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionMismatchError(ValueError):
    '''A subclass of ValueError for maps whose shapes do not fit together.'''
    pass


class NotInvertibleError(ValueError):
    '''A subclass of ValueError raised when inverting a singular map.

    Attributes:
        rank: The rank found by elimination, the witness of singularity.
        dim: The dimension of the square map.
    '''

    def __init__(self, message, rank, dim):
        super(NotInvertibleError, self).__init__(message)
        self.rank = rank
        self.dim = dim


def scalar(value):
    '''Convert a value to an exact rational.

    Args:
        value: An int, a Fraction or a string of the form "p" or "p/q".

    Returns:
        A Fraction in lowest terms.

    Raises:
        TypeError: If value is a float or of some other unsupported type.
        ValueError: If a string does not hold a rational or has a zero
            denominator.
    '''
    if isinstance(value, Fraction):
        return value
    if is_integer(value):
        return Fraction(value)
    if is_string(value):
        text = value.strip()
        if '.' in text or 'e' in text.lower():
            raise ValueError("Rational {0!r} must be written as p/q without a "
                             "decimal point".format(value))
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError("Rational {0!r} has a zero denominator".format(value))
    raise TypeError("Cannot use {0} as an exact scalar".format(
        str(type(value))[7: -2]))


class LinearMap(object):
    '''An exact k-linear map k^dom_dim -> k^cod_dim.

    The matrix is stored dense, column by column: column c holds all cod_dim
    coordinates of the image of the basis vector e_c. Equality is entrywise.

    LinearMaps are immutable.
    '''

    __slots__ = ('_cod', '_dom', '_cols', '_hash')

    def __init__(self, entries):
        '''Construct a LinearMap from a dense matrix.

        Args:
            entries: A sequence of cod_dim rows, each a sequence of dom_dim
                values acceptable to scalar().

        Raises:
            DimensionMismatchError: If the matrix is empty or ragged.
        '''
        rows = [[scalar(value) for value in row] for row in entries]
        if len(rows) == 0 or len(rows[0]) == 0:
            raise DimensionMismatchError("A LinearMap needs at least one row "
                                         "and one column")
        width = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != width:
                raise DimensionMismatchError("Row {0} has {1} entries, expected "
                    "{2}".format(index, len(row), width))
        self._init(len(rows), width, tuple(zip(*rows)))

    def _init(self, cod_dim, dom_dim, cols):
        self._cod = cod_dim
        self._dom = dom_dim
        self._cols = cols
        self._hash = None

    @classmethod
    def _trusted(cls, cod_dim, dom_dim, cols):
        # cols must be dom_dim sequences of cod_dim Fractions.
        result = cls.__new__(cls)
        result._init(cod_dim, dom_dim, tuple(tuple(col) for col in cols))
        return result

    @classmethod
    def from_columns(cls, cod_dim, columns):
        '''Construct a LinearMap from the images of the basis vectors.

        Args:
            cod_dim: The dimension of the codomain.
            columns: An iterable of mappings from row index to value, one per
                domain basis vector. Rows left out are zero.

        Returns:
            A LinearMap.

        Raises:
            DimensionMismatchError: If a row index lies outside the codomain.
        '''
        cols = []
        for column in columns:
            col = [ZERO] * cod_dim
            for r, value in column.items():
                if not 0 <= r < cod_dim:
                    raise DimensionMismatchError("Row index {0} outside "
                        "codomain of dimension {1}".format(r, cod_dim))
                col[r] = scalar(value)
            cols.append(col)
        if cod_dim < 1 or len(cols) < 1:
            raise DimensionMismatchError("A LinearMap needs positive dimensions")
        return cls._trusted(cod_dim, len(cols), cols)

    @property
    def cod_dim(self):
        return self._cod

    @property
    def dom_dim(self):
        return self._dom

    @property
    def shape(self):
        '''The pair (cod_dim, dom_dim).'''
        return (self._cod, self._dom)

    def entry(self, row, column):
        return self._cols[column][row]

    def column(self, index):
        '''The image of the basis vector e_index as a tuple.'''
        return self._cols[index]

    def nonzeros(self, index):
        '''The (row, value) pairs of column index with nonzero value, in row order.'''
        return _nonzero_items(self._cols[index])

    @property
    def entries(self):
        '''The matrix as a tuple of row tuples.'''
        return tuple(zip(*self._cols))

    def apply(self, vector):
        '''Apply the map to a coordinate vector.

        Args:
            vector: A sequence of dom_dim scalars.

        Returns:
            The image as a tuple of cod_dim Fractions.

        Raises:
            DimensionMismatchError: If the vector has the wrong length.
        '''
        if len(vector) != self._dom:
            raise DimensionMismatchError("Cannot apply a {0}x{1} map to a vector "
                "of length {2}".format(self._cod, self._dom, len(vector)))
        result = [ZERO] * self._cod
        for c, value in enumerate(vector):
            value = scalar(value)
            if value:
                for r, entry in _nonzero_items(self._cols[c]):
                    result[r] += entry * value
        return tuple(result)

    def __eq__(self, rhs):
        if not isinstance(rhs, LinearMap):
            return NotImplemented
        return self.shape == rhs.shape and self._cols == rhs._cols

    def __ne__(self, rhs):
        result = self.__eq__(rhs)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._cod, self._dom, self._cols))
        return self._hash

    def __repr__(self):
        return 'LinearMap(' + repr([[str(value) for value in row]
                                    for row in self.entries]) + ')'

    def __str__(self):
        return '\n'.join(' '.join(format_scalar(value) for value in row)
                         for row in self.entries)


def _nonzero_items(col):
    return [(r, value) for r, value in enumerate(col) if value]


def format_scalar(value):
    '''Render an exact rational canonically as "p" or "p/q".'''
    value = scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{0}/{1}'.format(value.numerator, value.denominator)


def _check_dim(dim, name='dim'):
    if not is_integer(dim):
        raise TypeError("{0} must be an integer".format(name))
    if dim < 1:
        raise ValueError("{0} must be at least 1, got {1}".format(name, dim))


def _unit_column(dim, index):
    col = [ZERO] * dim
    col[index] = ONE
    return col


@functools.lru_cache(maxsize=None)
def identity(dim):
    '''The identity map on k^dim.'''
    _check_dim(dim)
    return LinearMap._trusted(dim, dim, [_unit_column(dim, c) for c in range(dim)])


def zero(cod_dim, dom_dim):
    '''The zero map k^dom_dim -> k^cod_dim.'''
    _check_dim(cod_dim, 'cod_dim')
    _check_dim(dom_dim, 'dom_dim')
    return LinearMap._trusted(cod_dim, dom_dim, [(ZERO,) * cod_dim] * dom_dim)


def vector(values):
    '''A vector of k^n as the map k -> k^n sending 1 to it.'''
    return LinearMap([[value] for value in values])


def covector(values):
    '''A covector on k^n as the map k^n -> k.'''
    return LinearMap([list(values)])


def basis_vector(dim, index):
    '''The standard basis vector e_index of k^dim as a map k -> k^dim.'''
    _check_dim(dim)
    if not 0 <= index < dim:
        raise ValueError("Basis index {0} out of range for dimension {1}"
                         .format(index, dim))
    return LinearMap._trusted(dim, 1, [_unit_column(dim, index)])


def dual_bases(dim):
    '''The standard basis of k^dim and its coordinate functionals.

    Args:
        dim: The dimension, at least 1.

    Returns:
        A pair (basis, cobasis) of lists, basis[i] the map k -> k^dim with
        image e_i and cobasis[i] the map k^dim -> k with e^i(e_j) = delta_ij.
    '''
    _check_dim(dim)
    basis = [basis_vector(dim, i) for i in range(dim)]
    cobasis = [LinearMap._trusted(1, dim, [(ONE if j == i else ZERO,)
                                           for j in range(dim)])
               for i in range(dim)]
    return basis, cobasis


def _compose2(f, g):
    if f._dom != g._cod:
        raise DimensionMismatchError("Cannot compose a {0}x{1} map after a "
            "{2}x{3} map".format(f._cod, f._dom, g._cod, g._dom))
    fcols = [_nonzero_items(col) for col in f._cols]
    cols = []
    for gcol in g._cols:
        col = [ZERO] * f._cod
        for k, value in enumerate(gcol):
            if value:
                for r, entry in fcols[k]:
                    col[r] += entry * value
        cols.append(col)
    return LinearMap._trusted(f._cod, g._dom, cols)


def compose(f, g, *rest):
    '''Compose maps right to left: compose(f, g, h) is f o g o h.

    Args:
        f, g, *rest: LinearMaps, each domain matching the next codomain.

    Returns:
        The composite LinearMap, which acts first by the last argument.

    Raises:
        DimensionMismatchError: If neighbouring shapes do not match; the
            message names both shapes.
    '''
    maps = (f, g) + rest
    result = maps[-1]
    for m in reversed(maps[:-1]):
        result = _compose2(m, result)
    return result


def _kron2(f, g):
    gcod = g._cod
    gcols = [_nonzero_items(col) for col in g._cols]
    cols = []
    for fcol in f._cols:
        fitems = _nonzero_items(fcol)
        for gitems in gcols:
            col = [ZERO] * (f._cod * gcod)
            for rf, vf in fitems:
                base = rf * gcod
                for rg, vg in gitems:
                    col[base + rg] = vf * vg
            cols.append(col)
    return LinearMap._trusted(f._cod * gcod, f._dom * g._dom, cols)


def kron(f, g, *rest):
    '''The Kronecker product in row-major tensor order.

    The basis vector e_i (x) e_j of X (x) Y has flat index i * dim(Y) + j, so
    kron(f, g) sends e_i (x) e_j to f(e_i) (x) g(e_j).
    '''
    result = _kron2(f, g)
    for m in rest:
        result = _kron2(result, m)
    return result


def multi_index(flat, dims):
    '''Decode a flat row-major index into one index per tensor factor.'''
    indices = []
    for d in reversed(dims):
        flat, index = divmod(flat, d)
        indices.append(index)
    if flat:
        raise ValueError("Flat index out of range for dims {0}".format(dims))
    return tuple(reversed(indices))


def flat_index(indices, dims):
    '''Encode one index per tensor factor as a flat row-major index.'''
    if len(indices) != len(dims):
        raise DimensionMismatchError("{0} indices for {1} factors"
                                     .format(len(indices), len(dims)))
    flat = 0
    for index, d in zip(indices, dims):
        if not 0 <= index < d:
            raise ValueError("Index {0} out of range for factor of dimension "
                             "{1}".format(index, d))
        flat = flat * d + index
    return flat


@functools.lru_cache(maxsize=None)
def _index_map(dims, order):
    # Flat input index -> flat output index of the reordering.
    out_dims = tuple(dims[k] for k in order)
    return tuple(flat_index(tuple(indices[k] for k in order), out_dims)
                 for indices in itertools.product(*[range(d) for d in dims]))


def _reordering(dims, order):
    dims = tuple(dims)
    order = tuple(order)
    if sorted(order) != list(range(len(dims))):
        raise ValueError("{0} is not a permutation of {1} factors"
                         .format(order, len(dims)))
    for d in dims:
        _check_dim(d)
    return _index_map(dims, order)


def permute(f, dims, order):
    '''Reorder the tensor factors of the codomain of f.

    The result equals compose(permutation(dims, order), f) but moves rows
    instead of building the permutation matrix.

    Raises:
        ValueError: If order is not a permutation of the factor positions.
        DimensionMismatchError: If the factors do not multiply to cod_dim.
    '''
    moves = _reordering(dims, order)
    if len(moves) != f._cod:
        raise DimensionMismatchError("Factors {0} do not match a codomain of "
                                     "dimension {1}".format(tuple(dims), f._cod))
    cols = []
    for fcol in f._cols:
        col = [ZERO] * f._cod
        for r, value in _nonzero_items(fcol):
            col[moves[r]] = value
        cols.append(col)
    return LinearMap._trusted(f._cod, f._dom, cols)


def permute_domain(f, dims, order):
    '''Precompose f with a reordering of tensor factors.

    The result equals compose(f, permutation(dims, order)) but picks columns
    instead of building the permutation matrix.

    Raises:
        ValueError: If order is not a permutation of the factor positions.
        DimensionMismatchError: If the factors do not multiply to dom_dim.
    '''
    moves = _reordering(dims, order)
    if len(moves) != f._dom:
        raise DimensionMismatchError("Factors {0} do not match a domain of "
                                     "dimension {1}".format(tuple(dims), f._dom))
    return LinearMap._trusted(f._cod, f._dom, [f._cols[moves[c]] for c in range(f._dom)])


def permutation(dims, order):
    '''Reorder tensor factors.

    Args:
        dims: The dimensions of the input factors.
        order: A permutation of range(len(dims)); output factor t is input
            factor order[t].

    Returns:
        The permutation map sending e_{i_0} (x) ... (x) e_{i_k} to the tensor
        of the same vectors in the new order.

    Raises:
        ValueError: If order is not a permutation of the factor positions.
    '''
    moves = _reordering(dims, order)
    total = len(moves)
    return LinearMap._trusted(total, total, [_unit_column(total, moves[c])
                                             for c in range(total)])


def flip(dim_x, dim_y):
    '''The flip X (x) Y -> Y (x) X sending e_i (x) e_j to e_j (x) e_i.'''
    return permutation((dim_x, dim_y), (1, 0))


def transpose(f):
    '''The transpose matrix, representing the dual map on coordinate functionals.'''
    return LinearMap._trusted(f._dom, f._cod, zip(*f._cols))


def add(f, g):
    if f.shape != g.shape:
        raise DimensionMismatchError("Cannot add a {0}x{1} map to a {2}x{3} map"
                                     .format(f._cod, f._dom, g._cod, g._dom))
    return LinearMap._trusted(f._cod, f._dom,
        [[a + b for a, b in zip(fcol, gcol)] for fcol, gcol in zip(f._cols, g._cols)])


def scale(factor, f):
    factor = scalar(factor)
    return LinearMap._trusted(f._cod, f._dom,
                              [[value * factor for value in col] for col in f._cols])


def subtract(f, g):
    return add(f, scale(-1, g))


def _integer_rows(rows):
    # Clear denominators row by row; row scaling keeps the rank and, applied
    # to [F | I], the inverse read off at the end.
    result = []
    for row in rows:
        lcm = 1
        for value in row:
            lcm = lcm * value.denominator // gcd(lcm, value.denominator)
        result.append([(value * lcm).numerator for value in row])
    return result


def _eliminate(rows, width):
    '''Fraction-free Gauss-Jordan elimination on integer rows.

    Pivots are sought in the first width columns. Every division by the
    previous pivot is exact, so all entries stay integers; once the pivots
    are exhausted, each pivot row has the last pivot on its diagonal.

    Returns:
        A triple (rank, rows, last_pivot).
    '''
    rows = [list(row) for row in rows]
    rank = 0
    previous = 1
    for c in range(width):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][c]
        for r in range(len(rows)):
            if r != rank:
                factor = rows[r][c]
                rows[r] = [(lead * a - factor * b) // previous
                           for a, b in zip(rows[r], rows[rank])]
        previous = lead
        rank += 1
    return rank, rows, previous


def rank(f):
    '''The rank of f computed by fraction-free elimination.'''
    return _eliminate(_integer_rows(f.entries), f.dom_dim)[0]


def invert(f):
    '''The exact two-sided inverse of a square map.

    The augmented matrix [f | I] is reduced by fraction-free elimination and
    the inverse is its right half divided by the last pivot.

    Args:
        f: A square LinearMap.

    Returns:
        The inverse LinearMap.

    Raises:
        DimensionMismatchError: If f is not square.
        NotInvertibleError: If f is singular. The error carries the rank.
    '''
    n = f.dom_dim
    if f.cod_dim != n:
        raise DimensionMismatchError("Cannot invert a non-square {0}x{1} map"
                                     .format(f.cod_dim, n))
    augmented = [list(row) + [ONE if c == r else ZERO for c in range(n)]
                 for r, row in enumerate(f.entries)]
    found, rows, last = _eliminate(_integer_rows(augmented), n)
    if found < n:
        raise NotInvertibleError("Map of dimension {0} is not invertible: rank "
                                 "is {1}".format(n, found), found, n)
    return LinearMap([[Fraction(value, last) for value in row[n:]] for row in rows])


def power(f, exponent):
    '''f composed with itself exponent times; negative exponents invert f.'''
    if not is_integer(exponent):
        raise TypeError("exponent must be an integer")
    if f.cod_dim != f.dom_dim:
        raise DimensionMismatchError("Only square maps have powers")
    if exponent < 0:
        return power(invert(f), -exponent)
    result = identity(f.dom_dim)
    base = f
    while exponent:
        if exponent & 1:
            result = compose(base, result)
        exponent >>= 1
        if exponent:
            base = compose(base, base)
    return result


def is_identity(f):
    return f.cod_dim == f.dom_dim and f == identity(f.dom_dim)


def first_difference(f, g):
    '''Locate the first column on which two maps of the same shape differ.

    Returns:
        The smallest column index c with f(e_c) != g(e_c), or None if f == g.

    Raises:
        DimensionMismatchError: If the shapes differ.
    '''
    if f.shape != g.shape:
        raise DimensionMismatchError("Cannot compare a {0}x{1} map with a "
            "{2}x{3} map".format(f._cod, f._dom, g._cod, g._dom))
    for c, (fcol, gcol) in enumerate(zip(f._cols, g._cols)):
        if fcol != gcol:
            return c
    return None


def scalar_value(f):
    '''The single entry of a 1x1 map.'''
    if f.shape != (1, 1):
        raise DimensionMismatchError("Expected a 1x1 map, got {0}x{1}"
                                     .format(f.cod_dim, f.dom_dim))
    return f.entry(0, 0)
