# -*- coding: utf-8 -*-
"""
Min-max critical values of vertex-sampled functions.

A function given by its vertex values extends to every cell by the
lower-star rule (a cell takes the largest value of its vertices).  The
strict sublevel {f < a} is the subcomplex of cells with value < a.

c_ls(alpha, f) is the smallest threshold at which alpha is carried by
the sublevel.  It is read off a single reduction of the boundary matrix
whose rows are sorted by cell value: the representative of alpha
reduced against the boundaries has the smallest possible lowest row,
and the value of that row's cell is the answer.
"""
__all__ = ('SampledFunction', 'FiltrationSweep', 'sublevel', 'c_ls', 'c_ls_oracle',
           'essential_values', 'critical_vertices', 'critical_set',
           'is_homologically_nontrivial', 'ls_check', 'DEFAULT_LADDER')

import logging

import numpy as np

from .complexes import Subcomplex
from .errors import InputError, CapabilityError
from .fieldlinalg import F2, SparseColumnMatrix, reduce, reduce_vector, in_image, rank
from .fronts import SAME_VALUE
from .homology import HomologyClass, homology, induced_map
from .products import intersection_product


LOG = logging.getLogger(__name__)

DEFAULT_LADDER = (1, 2, 3)


class SampledFunction(object):
    """
    Piecewise-linear function given by one finite value per vertex
    """
    __slots__ = ('complex', 'values', '_cell_values')

    def __init__(self, complex_, values):
        values = np.array(values, dtype=np.float64).reshape(-1)
        if values.shape[0] != complex_.vertex_count:
            raise InputError("values: expected %d vertex values, got %d"
                             % (complex_.vertex_count, values.shape[0]))
        if not np.isfinite(values).all():
            raise InputError("values: vertex %d is not finite"
                             % (int(np.flatnonzero(~np.isfinite(values))[0]),))
        values.setflags(write=False)
        self.complex = complex_
        self.values = values
        self._cell_values = {}

    def __repr__(self):
        return "SampledFunction(%r, min=%r, max=%r)" % (self.complex, self.min, self.max)

    @property
    def min(self):
        return float(self.values.min())

    @property
    def max(self):
        return float(self.values.max())

    def cell_values(self, degree):
        found = self._cell_values.get(degree)
        if found is None:
            verts = self.complex.cell_vertices(degree)
            if verts.shape[0]:
                found = self.values[verts].max(axis=1)
            else:
                found = np.zeros(0, dtype=np.float64)
            found.setflags(write=False)
            self._cell_values[degree] = found
        return found

    def shifted(self, constant):
        return SampledFunction(self.complex, self.values + constant)

    def distinct_values(self):
        return np.unique(self.values)

    def tie_radius(self):
        """
        Half the smallest gap between distinct vertex values, 0 when
        the function is constant.  Values within SAME_VALUE count as one.
        """
        gaps = np.diff(self.distinct_values())
        gaps = gaps[gaps > SAME_VALUE]
        if not gaps.shape[0]:
            return 0.0
        return float(gaps.min()) / 2.0


def sublevel(f, a):
    """
    Cells whose every vertex value is < a
    """
    return Subcomplex(f.complex, [f.cell_values(d) < a
                                  for d in range(f.complex.dim + 1)], check=False)


class FiltrationSweep(object):
    """
    Lower-star filtration of f.  ``thresholds`` are the distinct values,
    ``probes`` the thresholds, the midpoints between them and one value
    above the maximum.  Boundary reductions in filtration order are built
    on demand per degree and shared by every class.

    With ``relative`` (one boolean mask per degree) the marked cells are
    quotiented out and classes live in the homology of the pair.
    """

    def __init__(self, f, field=F2, relative=None):
        self.function = f
        self.field = field
        self.relative = relative
        thresholds = f.distinct_values()
        self.thresholds = thresholds
        if thresholds.shape[0]:
            middles = (thresholds[1:] + thresholds[:-1]) / 2.0
            top = thresholds[-1] + max(1.0, abs(float(thresholds[-1])))
            self.probes = np.sort(np.concatenate([thresholds, middles, [top]]))
        else:
            self.probes = thresholds
        self._orders = {}
        self._reductions = {}

    def __repr__(self):
        return "FiltrationSweep(%r, %d thresholds)" % (self.function, len(self.thresholds))

    def order(self, degree):
        """
        (cells sorted by (value, index), position of every cell or -1)
        """
        found = self._orders.get(degree)
        if found is None:
            values = self.function.cell_values(degree)
            cells = np.lexsort((np.arange(values.shape[0]), values))
            if self.relative is not None and degree < len(self.relative):
                cells = cells[~self.relative[degree][cells]]
            position = np.full(values.shape[0], -1, dtype=np.int64)
            position[cells] = np.arange(cells.shape[0])
            found = (cells, position)
            self._orders[degree] = found
        return found

    def reduction(self, degree):
        """
        Reduced boundary C_(degree+1) -> C_degree with rows in filtration
        order.  Columns that are lows one degree up reduce to zero and
        are cleared without work.
        """
        found = self._reductions.get(degree)
        if found is None:
            complex_ = self.function.complex
            rows, position = self.order(degree)
            upper, _ = self.order(degree + 1)
            cleared = ()
            if degree + 2 <= complex_.dim:
                cleared = self.reduction(degree + 1).pivots.keys()
            boundary = complex_.boundary(degree + 1, self.field)
            columns = []
            for cell in upper:
                entries = [(int(position[row]), value)
                           for row, value in boundary.columns[cell]
                           if position[row] >= 0]
                entries.sort()
                columns.append(entries)
            found = reduce(SparseColumnMatrix(rows.shape[0], len(columns),
                                              columns, self.field),
                           track=False, clear=cleared)
            self._reductions[degree] = found
        return found

    def carrier_value(self, degree, cycle):
        """
        Smallest cell value at which the class of cycle is carried, or
        None when the class is zero
        """
        cells, position = self.order(degree)
        ordered = {}
        for cell, coeff in cycle.items():
            pos = int(position[cell])
            if pos >= 0:
                ordered[pos] = coeff
        remainder, _ = reduce_vector(self.reduction(degree), ordered)
        if not remainder:
            return None
        low = max(remainder)
        return float(self.function.cell_values(degree)[cells[low]])

    def value(self, alpha):
        """
        Selector value of a nonzero class, or of a sum of homogeneous
        classes (the largest value of its components)
        """
        parts = _components(alpha)
        if not any(parts):
            raise InputError("class: the selector is defined on nonzero classes only")
        out = None
        for part in parts:
            if not part:
                continue
            found = self.carrier_value(part.degree, part.representative)
            if found is None:
                raise InputError("class %s vanishes in the filtered pair" % (part.label,))
            out = found if out is None else max(out, found)
        return out


def _components(alpha):
    if isinstance(alpha, HomologyClass):
        return (alpha,)
    return tuple(alpha)


def _sweep_for(f, field, sweep):
    if sweep is None:
        return FiltrationSweep(f, field)
    if sweep.function is not f:
        raise InputError("sweep: built for another function")
    return sweep


def c_ls(alpha, f, field=F2, sweep=None):
    """
    inf {a : alpha is in the image of H(f < a) -> H(M)}
    """
    for part in _components(alpha):
        if part.complex is not f.complex:
            raise InputError("class %s lives on another complex" % (part.label,))
    sweep = _sweep_for(f, field, sweep)
    value = sweep.value(alpha)
    LOG.debug("c_ls(%r) = %r", alpha, value)
    return value


def _carried(f, part, a, field):
    complex_ = f.complex
    degree = part.degree
    inside = np.flatnonzero(f.cell_values(degree) < a)
    if not inside.shape[0]:
        return False
    boundary = complex_.boundary(degree, field)
    local = SparseColumnMatrix(boundary.rows, inside.shape[0],
                               [boundary.columns[j] for j in inside], field)
    cycles = [dict((int(inside[j]), v) for j, v in vec.items())
              for vec in reduce(local).kernel()]
    upper = complex_.boundary(degree + 1, field)
    spanning = SparseColumnMatrix.from_dicts(complex_.count(degree), cycles, field)
    return in_image(upper.hstack(spanning), part.representative).member


def c_ls_oracle(alpha, f, field=F2):
    """
    c_ls recomputed from scratch at every probe: kernel of the restricted
    boundary and image membership, no shared reduction
    """
    sweep = FiltrationSweep(f, field)
    parts = [p for p in _components(alpha) if p]
    if not parts:
        raise InputError("class: the selector is defined on nonzero classes only")
    for a in sweep.probes:
        if all(_carried(f, part, a, field) for part in parts):
            below = sweep.thresholds[sweep.thresholds < a]
            return float(below[-1])
    raise InputError("class vanishes in the ambient homology")


def essential_values(f, field=F2):
    """
    (sorted distinct values, [(class label, value)]) over every nonzero
    homogeneous class
    """
    if not field.finite:
        raise CapabilityError("essential_values: class enumeration needs a finite "
                              "field, got %r" % (field,))
    hom = homology(f.complex, field)
    sweep = FiltrationSweep(f, field)
    table = [(cls.label, c_ls(cls, f, field, sweep)) for cls in hom.classes()]
    values = sorted(set(value for _, value in table))
    LOG.info("essential values of %r: %r", f, values)
    return values, table


def critical_vertices(f, field=F2):
    """
    Boolean mask of vertices whose strict lower star changes homology:
    the cells having the vertex as their unique highest vertex carry
    nonzero relative homology.
    """
    complex_ = f.complex
    owners = []
    for degree in range(complex_.dim + 1):
        verts = complex_.cell_vertices(degree)
        values = f.values[verts]
        top = values.max(axis=1)
        unique = (values == top[:, None]).sum(axis=1) == 1
        owner = np.where(unique, verts[np.arange(verts.shape[0]), values.argmax(axis=1)], -1)
        owners.append(owner)
    by_vertex = [dict() for _ in range(complex_.vertex_count)]
    for degree, owner in enumerate(owners):
        for cell in np.flatnonzero(owner >= 0):
            by_vertex[int(owner[cell])].setdefault(degree, []).append(int(cell))
    critical = np.zeros(complex_.vertex_count, dtype=bool)
    for vertex, star in enumerate(by_vertex):
        critical[vertex] = _relative_betti(complex_, star, field) > 0
    return critical


def _relative_betti(complex_, star, field):
    """
    Total Betti number of the quotient chain complex on the given cells
    """
    if sum(len(cells) for cells in star.values()) == 1:
        return 1
    total = 0
    ranks = {}
    for degree, cells in star.items():
        lower = star.get(degree - 1, [])
        if not lower:
            ranks[degree] = 0
            continue
        position = dict((c, i) for i, c in enumerate(lower))
        boundary = complex_.boundary(degree, field)
        columns = [sorted((position[row], v) for row, v in boundary.columns[c]
                          if row in position) for c in cells]
        ranks[degree] = rank(SparseColumnMatrix(len(lower), len(columns), columns, field))
    for degree, cells in star.items():
        total += len(cells) - ranks.get(degree, 0) - ranks.get(degree + 1, 0)
    return total


def critical_set(f, level, field=F2, critical=None):
    """
    Full subcomplex on the critical vertices with |f(v) - level| <= h
    """
    if critical is None:
        critical = critical_vertices(f, field)
    near = np.abs(f.values - level) <= f.tie_radius()
    return Subcomplex.spanned(f.complex, np.flatnonzero(critical & near))


def is_homologically_nontrivial(subset, ladder=DEFAULT_LADDER, field=F2):
    """
    For each radius r, U_r is r star steps around the subset; report
    the ranks of H_j(U_r) -> H_j(M), j > 0
    """
    if subset.is_empty:
        raise InputError("subset: homological non-triviality needs a nonempty set")
    ladder = sorted(set(int(r) for r in ladder))
    if not ladder or ladder[0] < 0:
        raise InputError("ladder: radii must be nonnegative integers, got %r" % (ladder,))
    complex_ = subset.parent
    rows = []
    failing = None
    neighborhood = subset
    steps = 0
    for radius in ladder:
        while steps < radius:
            neighborhood = neighborhood.thicken()
            steps += 1
        ranks = [rank(induced_map(neighborhood, complex_, j, field))
                 for j in range(1, complex_.dim + 1)]
        nontrivial = any(ranks)
        rows.append({'radius': radius, 'ranks': ranks, 'nontrivial': nontrivial,
                     'cells': len(neighborhood)})
        if not nontrivial and failing is None:
            failing = radius
    verdict = 'nontrivial' if failing is None else 'trivial'
    LOG.info("non-triviality of %r over radii %r: %s", subset, ladder, verdict)
    return {'radii': rows, 'verdict': verdict, 'first_failing_radius': failing}


def ls_check(f, field=F2, ladder=DEFAULT_LADDER):
    """
    Coincidences c_ls(alpha . beta) = c_ls(alpha) with deg beta < dim M,
    and the non-triviality of the critical set at each coincidence value
    """
    if not field.finite:
        raise CapabilityError("ls_check: class enumeration needs a finite field, "
                              "got %r" % (field,))
    complex_ = f.complex
    hom = homology(complex_, field)
    sweep = FiltrationSweep(f, field)
    classes = hom.classes()
    values = dict((cls, sweep.value(cls)) for cls in classes)
    coincidences = []
    for alpha in classes:
        for beta in classes:
            if beta.degree >= complex_.dim:
                continue
            product = intersection_product(alpha, beta)
            if not product:
                continue
            if values[product] == values[alpha]:
                coincidences.append((alpha, beta, product, values[alpha]))
    critical = critical_vertices(f, field) if coincidences else None
    levels = {}
    rows = []
    for alpha, beta, product, level in coincidences:
        if level not in levels:
            found = critical_set(f, level, field, critical)
            if found.is_empty:
                levels[level] = {'verdict': 'empty', 'critical_vertices': 0}
            else:
                levels[level] = is_homologically_nontrivial(found, ladder, field)
                levels[level]['critical_vertices'] = int(found.vertices().shape[0])
        rows.append({'alpha': alpha.label, 'beta': beta.label, 'product': product.label,
                     'value': level, 'verdict': levels[level]['verdict']})
    LOG.info("ls_check(%r): %d coincidences", f, len(rows))
    return {'values': dict((cls.label, values[cls]) for cls in classes),
            'coincidences': rows,
            'levels': [dict(level=level, **levels[level]) for level in sorted(levels)],
            'ladder': list(ladder), 'tie_radius': f.tie_radius()}
