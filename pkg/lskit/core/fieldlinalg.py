# -*- coding: utf-8 -*-
"""
Exact linear algebra over F2 and Q.

Vectors are sparse dicts ``{index: nonzero scalar}``; matrices are
stored column by column.  The column reduction here is the persistence
style one: columns are processed left to right and each is cleared
against earlier columns until its lowest nonzero row ("low") is unique.
"""
__all__ = ('GF2', 'Rationals', 'F2', 'QQ', 'field_by_name',
           'SparseColumnMatrix', 'Reduction', 'ImageQuery',
           'reduce', 'reduce_vector', 'in_image', 'rank', 'kernel_basis',
           'as_sparse', 'as_dense')

import logging
from collections import namedtuple
from fractions import Fraction

from .errors import InputError, CapabilityError


LOG = logging.getLogger(__name__)


class GF2(object):
    __slots__ = ()
    name = 'f2'
    finite = True
    zero = 0
    one = 1

    def __repr__(self):
        return 'GF(2)'

    def __call__(self, value):
        if isinstance(value, Fraction):
            if value.denominator % 2 == 0:
                raise InputError("coefficient %s is not defined over F2" % (value,))
            value = value.numerator
        return int(value) & 1

    def elements(self):
        return (0, 1)

    def add(self, a, b):
        return a ^ b

    sub = add

    def mul(self, a, b):
        return a & b

    def neg(self, a):
        return a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of 0 in F2")
        return 1

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def axpy(self, target, coeff, source):
        """
        target += coeff * source, in place on sparse dicts
        """
        if not coeff:
            return target
        for idx in source:
            if idx in target:
                del target[idx]
            else:
                target[idx] = 1
        return target


class Rationals(object):
    __slots__ = ()
    name = 'q'
    finite = False
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return 'Q'

    def __call__(self, value):
        return Fraction(value)

    def elements(self):
        raise CapabilityError("Q has infinitely many elements")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        return a / b

    def axpy(self, target, coeff, source):
        if not coeff:
            return target
        for idx, value in source.items():
            total = target.get(idx, 0) + coeff * value
            if total:
                target[idx] = total
            else:
                target.pop(idx, None)
        return target


F2 = GF2()
QQ = Rationals()


def field_by_name(name):
    try:
        return {'f2': F2, 'q': QQ}[str(name).lower()]
    except KeyError:
        raise InputError("field: expected 'f2' or 'q', got %r" % (name,))


def as_sparse(vector, length=None, field=F2):
    """
    Coerce a dense sequence or a sparse dict to a sparse dict over field,
    checking indices against length when given.
    """
    if isinstance(vector, dict):
        items = vector.items()
    else:
        vector = list(vector)
        if length is not None and len(vector) != length:
            raise InputError("vector: expected length %d, got %d"
                             % (length, len(vector)))
        items = enumerate(vector)
    out = {}
    for idx, value in items:
        value = field(value)
        if not value:
            continue
        if idx < 0 or (length is not None and idx >= length):
            raise InputError("vector: index %d outside 0..%s" % (idx, length))
        out[int(idx)] = value
    return out


def as_dense(vector, length, field=F2):
    out = [field.zero] * length
    for idx, value in vector.items():
        out[idx] = value
    return tuple(out)


class SparseColumnMatrix(object):
    """
    rows x cols matrix; ``columns[j]`` is a tuple of (row, value) pairs
    with strictly increasing rows and no stored zeros.
    """
    __slots__ = ('rows', 'cols', 'columns', 'field')

    def __init__(self, rows, cols, columns, field=F2):
        if len(columns) != cols:
            raise InputError("columns: expected %d columns, got %d"
                             % (cols, len(columns)))
        self.rows = int(rows)
        self.cols = int(cols)
        self.field = field
        checked = []
        for j, column in enumerate(columns):
            entries = []
            last = -1
            for row, value in column:
                if row <= last:
                    raise InputError("columns[%d]: row indices must be strictly "
                                     "increasing" % (j,))
                if row >= self.rows:
                    raise InputError("columns[%d]: row %d out of range" % (j, row))
                value = field(value)
                if value:
                    entries.append((row, value))
                last = row
            checked.append(tuple(entries))
        self.columns = tuple(checked)

    @classmethod
    def from_dicts(cls, rows, columns, field=F2):
        return cls(rows, len(columns),
                   [sorted(col.items()) for col in columns], field)

    @classmethod
    def from_dense(cls, dense_rows, field=F2, cols=None):
        dense_rows = [list(row) for row in dense_rows]
        nrows = len(dense_rows)
        ncols = len(dense_rows[0]) if nrows else (cols or 0)
        columns = []
        for j in range(ncols):
            columns.append([(i, dense_rows[i][j]) for i in range(nrows)
                            if field(dense_rows[i][j])])
        return cls(nrows, ncols, columns, field)

    @classmethod
    def identity(cls, n, field=F2):
        return cls(n, n, [[(j, field.one)] for j in range(n)], field)

    @classmethod
    def zeros(cls, rows, cols, field=F2):
        return cls(rows, cols, [()] * cols, field)

    def __repr__(self):
        return "%s(%dx%d over %r, nnz=%d)" % (
            self.__class__.__name__, self.rows, self.cols, self.field,
            sum(len(col) for col in self.columns))

    def __eq__(self, other):
        return (isinstance(other, SparseColumnMatrix)
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self.columns == other.columns)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.rows, self.cols, self.columns))

    def column(self, j):
        return dict(self.columns[j])

    def to_dense(self):
        out = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for j, column in enumerate(self.columns):
            for row, value in column:
                out[row][j] = value
        return out

    def transpose(self):
        cols = [[] for _ in range(self.rows)]
        for j, column in enumerate(self.columns):
            for row, value in column:
                cols[row].append((j, value))
        return SparseColumnMatrix(self.cols, self.rows, cols, self.field)

    def hstack(self, other):
        assert self.rows == other.rows and self.field is other.field
        return SparseColumnMatrix(self.rows, self.cols + other.cols,
                                  self.columns + other.columns, self.field)

    def vstack(self, other):
        assert self.cols == other.cols and self.field is other.field
        columns = [a + tuple((row + self.rows, value) for row, value in b)
                   for a, b in zip(self.columns, other.columns)]
        return SparseColumnMatrix(self.rows + other.rows, self.cols,
                                  columns, self.field)

    def apply(self, vector):
        """
        Matrix times sparse vector (indexed by column)
        """
        out = {}
        for j, coeff in vector.items():
            self.field.axpy(out, coeff, dict(self.columns[j]))
        return out


class Reduction(object):
    """
    Column-echelon form R = M V of a matrix M.  ``pivots`` maps each low
    to the unique reduced column that has it.
    """
    __slots__ = ('matrix', 'reduced', 'transform', 'pivots')

    def __init__(self, matrix, reduced, transform, pivots):
        self.matrix = matrix
        self.reduced = reduced
        self.transform = transform
        self.pivots = pivots

    @property
    def field(self):
        return self.matrix.field

    @property
    def rank(self):
        return len(self.pivots)

    def low(self, j):
        column = self.reduced[j]
        return max(column) if column else None

    def kernel(self):
        """
        Sparse basis of the kernel: transform columns whose reduced
        column vanished.
        """
        return [dict(self.transform[j]) for j, column in enumerate(self.reduced)
                if not column]

    def reduce_vector(self, vector):
        return reduce_vector(self, vector)


def reduce(matrix, track=True, clear=()):
    """
    Column reduction of matrix.  With ``track`` the transform V is kept
    so that R = M V.  Columns listed in ``clear`` are known to reduce to
    zero and are left empty; they need ``track=False``.
    """
    if clear and track:
        raise ValueError("clear: cleared columns leave no transform to track")
    if matrix.field.name == GF2.name:
        return _reduce_f2(matrix, track, clear)
    field = matrix.field
    clear = frozenset(clear)
    reduced = []
    transform = [] if track else None
    pivots = {}
    for j in range(matrix.cols):
        column = {} if j in clear else matrix.column(j)
        combo = {j: field.one}
        while column:
            low = max(column)
            k = pivots.get(low)
            if k is None:
                break
            coeff = field.neg(field.div(column[low], reduced[k][low]))
            field.axpy(column, coeff, reduced[k])
            if track:
                field.axpy(combo, coeff, transform[k])
        if column:
            pivots[max(column)] = j
        reduced.append(column)
        if track:
            transform.append(combo)
    LOG.debug("reduced %r: rank %d", matrix, len(pivots))
    return Reduction(matrix, reduced, transform, pivots)


def _reduce_f2(matrix, track, clear):
    # columns as sets, so a column addition is one symmetric difference
    clear = frozenset(clear)
    work = []
    combos = []
    pivots = {}
    for j, entries in enumerate(matrix.columns):
        column = set() if j in clear else set(row for row, _ in entries)
        combo = {j} if track else None
        while column:
            low = max(column)
            k = pivots.get(low)
            if k is None:
                break
            column ^= work[k]
            if track:
                combo ^= combos[k]
        if column:
            pivots[max(column)] = j
        work.append(column)
        combos.append(combo)
    reduced = [dict.fromkeys(column, 1) for column in work]
    transform = [dict.fromkeys(combo, 1) for combo in combos] if track else None
    LOG.debug("reduced %r: rank %d, %d columns cleared", matrix, len(pivots), len(clear))
    return Reduction(matrix, reduced, transform, pivots)


def reduce_vector(reduction, vector):
    """
    Clear the low of vector against the pivots of a reduction until it is
    zero or its low is not a pivot.  Returns (remainder, coefficients)
    with vector = remainder + sum(coefficients[k] * reduced[k]).

    Of all vectors in vector + span(reduced) the remainder has the
    smallest low.
    """
    field = reduction.field
    if field.name == GF2.name:
        remainder = set(idx for idx, value in vector.items() if value)
        used = set()
        while remainder:
            k = reduction.pivots.get(max(remainder))
            if k is None:
                break
            remainder.symmetric_difference_update(reduction.reduced[k])
            used ^= {k}
        return dict.fromkeys(remainder, 1), dict.fromkeys(used, 1)
    remainder = dict(vector)
    coefficients = {}
    while remainder:
        low = max(remainder)
        k = reduction.pivots.get(low)
        if k is None:
            break
        coeff = field.div(remainder[low], reduction.reduced[k][low])
        field.axpy(remainder, field.neg(coeff), reduction.reduced[k])
        total = field.add(coefficients.get(k, field.zero), coeff)
        if total:
            coefficients[k] = total
        else:
            coefficients.pop(k, None)
    return remainder, coefficients


ImageQuery = namedtuple('ImageQuery', ('member', 'coefficients'))


def in_image(matrix, vector, reduction=None):
    """
    Decide whether vector lies in the column span of matrix.  On success
    the witness expresses vector over the original columns.
    """
    field = matrix.field
    vector = as_sparse(vector, matrix.rows, field)
    if reduction is None:
        reduction = reduce(matrix)
    remainder, coefficients = reduce_vector(reduction, vector)
    if remainder:
        return ImageQuery(False, None)
    witness = {}
    for k, coeff in coefficients.items():
        field.axpy(witness, coeff, reduction.transform[k])
    return ImageQuery(True, as_dense(witness, matrix.cols, field))


def rank(matrix):
    return reduce(matrix).rank


def kernel_basis(matrix):
    reduction = reduce(matrix)
    return [as_dense(vec, matrix.cols, matrix.field)
            for vec in reduction.kernel()]
