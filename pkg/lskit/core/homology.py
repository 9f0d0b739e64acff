# -*- coding: utf-8 -*-
"""
Homology of cell complexes and subcomplexes with fixed bases, and
inclusion-induced maps.
"""
__all__ = ('Homology', 'HomologyClass', 'homology', 'subcomplex_homology',
           'induced_map', 'is_cycle')

import itertools
import logging

import numpy as np

from .complexes import CubicalComplex, Subcomplex
from .errors import InputError, CapabilityError
from .fieldlinalg import F2, SparseColumnMatrix, reduce, reduce_vector, as_dense


LOG = logging.getLogger(__name__)


def is_cycle(complex_, degree, chain, field=F2):
    return not complex_.boundary(degree, field).apply(chain)


class HomologyClass(object):
    """
    Degree-tagged class: coefficients over the basis of H_degree and a
    representative cycle (sparse dict cell -> scalar).
    """
    __slots__ = ('homology', 'degree', 'coefficients', 'representative')

    def __init__(self, homology, degree, coefficients, representative):
        self.homology = homology
        self.degree = degree
        self.coefficients = tuple(coefficients)
        self.representative = representative

    def __repr__(self):
        return "<%s>" % (self.label,)

    def __eq__(self, other):
        return (isinstance(other, HomologyClass)
                and other.homology is self.homology
                and other.degree == self.degree
                and other.coefficients == self.coefficients)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((id(self.homology), self.degree, self.coefficients))

    def __bool__(self):
        return any(self.coefficients)

    __nonzero__ = __bool__

    def __add__(self, other):
        assert other.homology is self.homology and other.degree == self.degree
        field = self.homology.field
        return self.homology.cls(self.degree, [field.add(a, b) for a, b in
                                               zip(self.coefficients, other.coefficients)])

    @property
    def complex(self):
        return self.homology.complex

    @property
    def label(self):
        hom = self.homology
        if not self:
            return 'zero%d' % (self.degree,)
        if self.degree == 0 and self == hom.point():
            return 'pt'
        nonzero = [i for i, c in enumerate(self.coefficients) if c]
        if self.degree == hom.complex.dim and hom.betti[self.degree] == 1 \
                and self.coefficients[0] == hom.field.one:
            return 'fund'
        if len(nonzero) == 1 and self.coefficients[nonzero[0]] == hom.field.one:
            return 'b%d:%d' % (self.degree, nonzero[0])
        return 'b%d:(%s)' % (self.degree, ','.join(str(c) for c in self.coefficients))


class Homology(object):
    """
    Bases of H_*(X) for a complex (or one of its subcomplexes) over a field.
    ``bases[j]`` lists the representative cycles of H_j.
    """

    def __init__(self, complex_, field=F2, subcomplex=None, canonical=None):
        self.complex = complex_
        self.field = field
        self.subcomplex = subcomplex
        self._coordinate_reductions = {}
        bases = []
        for degree in range(complex_.dim + 1):
            if canonical is not None:
                bases.append(canonical[degree])
            else:
                bases.append(self._compute_basis(degree))
        self.bases = tuple(bases)
        self.betti = tuple(len(basis) for basis in bases)
        LOG.debug("homology of %r over %r: betti %r", complex_, field, self.betti)

    def __repr__(self):
        return "Homology%r of %r over %r" % (self.betti, self.complex, self.field)

    def _cells(self, degree):
        if self.subcomplex is None:
            return np.arange(self.complex.count(degree))
        return self.subcomplex.cells(degree)

    def _compute_basis(self, degree):
        field = self.field
        cells = self._cells(degree)
        boundary = self.complex.boundary(degree, field)
        local = SparseColumnMatrix(boundary.rows, len(cells),
                                   [boundary.columns[j] for j in cells], field)
        kernel = [dict((int(cells[j]), v) for j, v in vec.items())
                  for vec in reduce(local).kernel()]
        if not kernel:
            return []
        upper = self.complex.boundary(degree + 1, field)
        columns = [upper.columns[j] for j in self._cells(degree + 1)]
        columns += [sorted(vec.items()) for vec in kernel]
        stacked = reduce(SparseColumnMatrix(self.complex.count(degree), len(columns),
                                            columns, field))
        skip = len(columns) - len(kernel)
        return [kernel[k] for k in range(len(kernel)) if stacked.reduced[skip + k]]

    def _coordinate_reduction(self, degree):
        reduction = self._coordinate_reductions.get(degree)
        if reduction is None:
            upper = self.complex.boundary(degree + 1, self.field)
            columns = [upper.columns[j] for j in self._cells(degree + 1)]
            columns += [sorted(rep.items()) for rep in self.bases[degree]]
            matrix = SparseColumnMatrix(self.complex.count(degree), len(columns),
                                        columns, self.field)
            reduction = (reduce(matrix), len(columns) - len(self.bases[degree]))
            self._coordinate_reductions[degree] = reduction
        return reduction

    def coordinates(self, degree, cycle):
        """
        Coefficients of the class of cycle in the basis of H_degree
        """
        field = self.field
        if not is_cycle(self.complex, degree, cycle, field):
            raise InputError("chain of degree %d is not a cycle" % (degree,))
        reduction, skip = self._coordinate_reduction(degree)
        remainder, coefficients = reduce_vector(reduction, cycle)
        if remainder:
            raise InputError("cycle of degree %d is not carried by %r"
                             % (degree, self.subcomplex or self.complex))
        witness = {}
        for k, coeff in coefficients.items():
            field.axpy(witness, coeff, reduction.transform[k])
        dense = as_dense(witness, reduction.matrix.cols, field)
        return tuple(dense[skip:])

    def cls(self, degree, coefficients):
        field = self.field
        coefficients = [field(c) for c in coefficients]
        if not 0 <= degree <= self.complex.dim:
            raise InputError("class: degree %d outside 0..%d" % (degree, self.complex.dim))
        if len(coefficients) != self.betti[degree]:
            raise InputError("class: degree %d needs %d coefficients, got %d"
                             % (degree, self.betti[degree], len(coefficients)))
        rep = {}
        for coeff, cycle in zip(coefficients, self.bases[degree]):
            field.axpy(rep, coeff, cycle)
        return HomologyClass(self, degree, coefficients, rep)

    def basis_class(self, degree, index):
        if not 0 <= degree <= self.complex.dim or not 0 <= index < self.betti[degree]:
            raise InputError("class: no basis element b%d:%d (betti %r)"
                             % (degree, index, self.betti))
        coefficients = [self.field.zero] * self.betti[degree]
        coefficients[index] = self.field.one
        return self.cls(degree, coefficients)

    def from_cycle(self, degree, cycle):
        return self.cls(degree, self.coordinates(degree, cycle))

    def zero(self, degree):
        return self.cls(degree, [self.field.zero] * self.betti[degree])

    def point(self):
        if self.betti[0] == 0:
            raise CapabilityError("empty complex has no point class")
        return self.from_cycle(0, {0: self.field.one}) if self.subcomplex is None \
            else self.from_cycle(0, {int(self._cells(0)[0]): self.field.one})

    def fundamental(self):
        top = self.complex.dim
        if self.betti[top] != 1:
            raise CapabilityError("%r has no fundamental class (top betti %d)"
                                  % (self.complex, self.betti[top]))
        return self.basis_class(top, 0)

    def classes(self, degree=None):
        """
        Every nonzero class over a finite field, degree by degree, in
        coefficient order
        """
        elements = self.field.elements()
        degrees = range(self.complex.dim + 1) if degree is None else [degree]
        out = []
        for d in degrees:
            for coefficients in itertools.product(elements, repeat=self.betti[d]):
                if any(coefficients):
                    out.append(self.cls(d, coefficients))
        return out

    def nonzero_sums(self):
        """
        Every nonzero element of the total homology over a finite field as
        a tuple of its nonzero homogeneous components
        """
        elements = self.field.elements()
        per_degree = [list(itertools.product(elements, repeat=b)) for b in self.betti]
        out = []
        for choice in itertools.product(*per_degree):
            parts = tuple(self.cls(d, c) for d, c in enumerate(choice) if any(c))
            if parts:
                out.append(parts)
        return out

    def named(self, name):
        """
        Parse a class name: pt, fund, b<degree>:<index> or
        csv:<c0,c1,...> over the concatenated basis
        """
        name = str(name).strip()
        if name == 'pt':
            return self.point()
        if name == 'fund':
            return self.fundamental()
        if name.startswith('b') and ':' in name:
            try:
                degree, index = (int(part) for part in name[1:].split(':', 1))
            except ValueError:
                raise InputError("class: cannot parse %r" % (name,))
            return self.basis_class(degree, index)
        if name.startswith('csv:'):
            try:
                values = [self.field(v) for v in name[4:].split(',') if v.strip()]
            except (ValueError, ZeroDivisionError):
                raise InputError("class: cannot parse coefficients in %r" % (name,))
            if len(values) != sum(self.betti):
                raise InputError("class: %r needs %d coefficients (betti %r)"
                                 % (name, sum(self.betti), self.betti))
            parts = []
            start = 0
            for degree, count in enumerate(self.betti):
                chunk = values[start:start + count]
                start += count
                if any(chunk):
                    parts.append(self.cls(degree, chunk))
            if len(parts) != 1:
                raise InputError("class: %r must be nonzero in exactly one degree"
                                 % (name,))
            return parts[0]
        raise InputError("class: expected pt, fund, b<degree>:<index> or "
                         "csv:<coeffs>, got %r" % (name,))


def _torus_cycles(complex_, field):
    """
    Coordinate sub-tori: for every j-subset I of the axes, the sum of the
    j-cells spanning I with anchor 0 on the other axes
    """
    bases = []
    for degree in range(complex_.axes + 1):
        basis = []
        for mask in itertools.combinations(range(complex_.axes), degree):
            span = tuple(n if axis in mask else 1
                         for axis, n in enumerate(complex_.shape))
            anchors = np.indices(span).reshape(len(span), -1).T if span else \
                np.zeros((1, 0), dtype=np.int64)
            cells = np.atleast_1d(complex_.cell_index(mask, anchors))
            basis.append(dict((int(c), field.one) for c in cells))
        bases.append(basis)
    return bases


def homology(complex_, field=F2):
    """
    Homology of a closed complex; cached on the complex.  Periodic grids
    use the coordinate sub-tori as canonical basis.
    """
    cache = complex_.__dict__.setdefault('_homology_cache', {})
    found = cache.get(field.name)
    if found is not None:
        return found
    canonical = None
    if isinstance(complex_, CubicalComplex) and complex_.is_torus:
        canonical = _torus_cycles(complex_, field)
    found = Homology(complex_, field, canonical=canonical)
    cache[field.name] = found
    return found


def subcomplex_homology(subcomplex, field=F2):
    return Homology(subcomplex.parent, field, subcomplex=subcomplex)


def induced_map(sub, complex_, degree, field=F2):
    """
    Matrix of H_degree(sub) -> H_degree(complex_) in the chosen bases
    """
    if not isinstance(sub, Subcomplex):
        raise InputError("induced_map: expected a Subcomplex, got %r" % (sub,))
    if sub.parent is not complex_:
        raise InputError("induced_map: subcomplex belongs to another complex")
    # re-validate closure, masks may have been assembled by hand
    Subcomplex(complex_, sub.masks)
    source = subcomplex_homology(sub, field)
    target = homology(complex_, field)
    if degree < 0 or degree > complex_.dim:
        return SparseColumnMatrix.zeros(0, 0, field)
    columns = []
    for cycle in source.bases[degree]:
        coords = target.coordinates(degree, cycle)
        columns.append([(i, c) for i, c in enumerate(coords) if c])
    return SparseColumnMatrix(target.betti[degree], source.betti[degree], columns, field)
