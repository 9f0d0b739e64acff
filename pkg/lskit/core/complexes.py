# -*- coding: utf-8 -*-
"""
Cell complexes for closed manifolds: periodic (and open) cubical grids
and simplicial complexes, plus face-closed subcomplexes.

Cells are addressed by ``(degree, index)``; indices are fixed at
construction so every matrix built on a complex is reproducible.
"""
__all__ = ('CellComplex', 'CubicalComplex', 'SimplicialComplex', 'Subcomplex',
           'builtin', 'BUILTIN_MODELS', 'simplicial_torus')

import itertools
import logging

import numpy as np

from .errors import InputError
from .fieldlinalg import F2, SparseColumnMatrix


LOG = logging.getLogger(__name__)

BUILTIN_MODELS = ('point', 's1', 't2', 't3', 's2')


class CellComplex(object):
    """
    Common interface of the cell complex models.  Subclasses fill in
    ``_counts`` and implement ``_boundary_columns`` and
    ``_compute_cell_vertices``.
    """
    kind = None

    def __init__(self, model=None):
        self.model = model
        self._boundaries = {}
        self._cell_vertices = {}
        self._counts = ()

    @property
    def dim(self):
        return len(self._counts) - 1

    def count(self, degree):
        if 0 <= degree < len(self._counts):
            return self._counts[degree]
        return 0

    @property
    def counts(self):
        return tuple(self._counts)

    @property
    def size(self):
        return sum(self._counts)

    @property
    def vertex_count(self):
        return self.count(0)

    def cells(self):
        """
        All cells ordered by dimension then index
        """
        for degree, count in enumerate(self._counts):
            for index in range(count):
                yield degree, index

    def boundary(self, degree, field=F2):
        """
        Matrix of the boundary C_degree -> C_{degree-1}
        """
        key = (degree, field.name)
        matrix = self._boundaries.get(key)
        if matrix is None:
            rows = self.count(degree - 1)
            cols = self.count(degree)
            if degree <= 0 or degree > self.dim:
                matrix = SparseColumnMatrix.zeros(rows, cols, field)
            else:
                columns = [[(row, sign) for row, sign in column]
                           for column in self._boundary_columns(degree)]
                matrix = SparseColumnMatrix(rows, cols, columns, field)
            self._boundaries[key] = matrix
        return matrix

    def cell_vertices(self, degree):
        """
        Integer array (cells, vertices per cell) of vertex indices
        """
        verts = self._cell_vertices.get(degree)
        if verts is None:
            if 0 <= degree <= self.dim:
                verts = self._compute_cell_vertices(degree)
            else:
                verts = np.zeros((0, 0), dtype=np.int64)
            verts.setflags(write=False)
            self._cell_vertices[degree] = verts
        return verts

    def sanity_check(self):
        """
        Verify that the boundary squares to zero, over the integers
        """
        for degree in range(2, self.dim + 1):
            upper = self._boundary_columns(degree)
            lower = list(self._boundary_columns(degree - 1))
            for j, column in enumerate(upper):
                total = {}
                for face, sign in column:
                    for row, sub in lower[face]:
                        total[row] = total.get(row, 0) + sign * sub
                if any(total.values()):
                    raise InputError("complex: boundary of boundary is not zero "
                                     "at cell (%d, %d)" % (degree, j))

    def _boundary_columns(self, degree):
        raise NotImplementedError

    def _compute_cell_vertices(self, degree):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError

    def __repr__(self):
        return "%s%s%r" % (self.__class__.__name__,
                           "[%s]" % (self.model,) if self.model else "",
                           self.counts)


class CubicalComplex(CellComplex):
    """
    Grid of unit cubes.  ``shape[i]`` is the number of vertices along
    axis i; a periodic axis closes up (as many edges as vertices), an
    open axis has one edge less.

    A cell is an axis mask (sorted tuple of active axes) and an anchor
    (its lowest vertex).  Its boundary is the sum over the k-th active
    axis of (-1)**k * (upper face - lower face).
    """
    kind = 'cubical'

    def __init__(self, shape, periodic=True, sanity_check=True, model=None):
        super(CubicalComplex, self).__init__(model)
        shape = tuple(int(n) for n in shape)
        if isinstance(periodic, bool):
            periodic = (periodic,) * len(shape)
        periodic = tuple(bool(p) for p in periodic)
        if len(periodic) != len(shape):
            raise InputError("periodic: expected %d flags, got %d"
                             % (len(shape), len(periodic)))
        for axis, (n, closed) in enumerate(zip(shape, periodic)):
            if closed and n < 3:
                raise InputError("resolution[%d]: periodic axes need at least 3 "
                                 "vertices, got %d" % (axis, n))
            if not closed and n < 2:
                raise InputError("resolution[%d]: open axes need at least 2 "
                                 "vertices, got %d" % (axis, n))
        self.shape = shape
        self.periodic = periodic
        self._blocks = []
        counts = []
        for degree in range(len(shape) + 1):
            blocks = []
            offset = 0
            for mask in itertools.combinations(range(len(shape)), degree):
                anchor_shape = self._anchor_shape(mask)
                blocks.append((mask, offset, anchor_shape))
                offset += int(np.prod(anchor_shape, dtype=np.int64))
            self._blocks.append(blocks)
            counts.append(offset)
        self._counts = tuple(counts)
        self._block_of = dict((mask, (offset, anchor_shape))
                              for blocks in self._blocks
                              for mask, offset, anchor_shape in blocks)
        if sanity_check:
            self.sanity_check()
        LOG.debug("built %r", self)

    @property
    def is_torus(self):
        return all(self.periodic)

    @property
    def axes(self):
        return len(self.shape)

    def _anchor_shape(self, mask):
        return tuple(n if (closed or axis not in mask) else n - 1
                     for axis, (n, closed) in enumerate(zip(self.shape, self.periodic)))

    def blocks(self, degree):
        return list(self._blocks[degree])

    def cell_index(self, mask, anchor):
        """
        Index (within its degree) of the cell with the given mask and anchor;
        anchor coordinates are wrapped on periodic axes.
        """
        offset, anchor_shape = self._block_of[tuple(mask)]
        anchor = np.asarray(anchor, dtype=np.int64)
        wrapped = [anchor[..., axis] % n if closed else anchor[..., axis]
                   for axis, (n, closed) in enumerate(zip(self.shape, self.periodic))]
        if not wrapped:
            return offset + np.zeros(anchor.shape[:-1], dtype=np.int64)
        return offset + np.ravel_multi_index(wrapped, anchor_shape)

    def cell(self, degree, index):
        """
        (mask, anchor) of a cell
        """
        for mask, offset, anchor_shape in self._blocks[degree]:
            size = int(np.prod(anchor_shape, dtype=np.int64))
            if offset <= index < offset + size:
                anchor = np.unravel_index(index - offset, anchor_shape) if anchor_shape else ()
                return mask, tuple(int(a) for a in anchor)
        raise IndexError("no cell (%d, %d)" % (degree, index))

    def _anchors(self, anchor_shape):
        if not anchor_shape:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.indices(anchor_shape).reshape(len(anchor_shape), -1)
        return grids.T.astype(np.int64)

    def _boundary_columns(self, degree):
        columns = []
        for mask, offset, anchor_shape in self._blocks[degree]:
            anchors = self._anchors(anchor_shape)
            entries = []
            for k, axis in enumerate(mask):
                face_mask = mask[:k] + mask[k + 1:]
                sign = -1 if k % 2 else 1
                lower = self.cell_index(face_mask, anchors)
                shifted = anchors.copy()
                shifted[:, axis] += 1
                upper = self.cell_index(face_mask, shifted)
                entries.append((upper, sign))
                entries.append((lower, -sign))
            for cell in range(anchors.shape[0]):
                column = {}
                for rows, sign in entries:
                    row = int(rows[cell])
                    column[row] = column.get(row, 0) + sign
                columns.append(sorted((row, value) for row, value in column.items()
                                      if value))
        return columns

    def _compute_cell_vertices(self, degree):
        parts = []
        for mask, offset, anchor_shape in self._blocks[degree]:
            anchors = self._anchors(anchor_shape)
            corners = []
            for bits in itertools.product((0, 1), repeat=len(mask)):
                corner = anchors.copy()
                for axis, bit in zip(mask, bits):
                    corner[:, axis] += bit
                corners.append(self.cell_index((), corner))
            parts.append(np.stack(corners, axis=1))
        if not parts:
            return np.zeros((0, 2 ** degree), dtype=np.int64)
        return np.concatenate(parts, axis=0)

    def vertex_coordinates(self):
        """
        Grid index of every vertex, shape (vertices, axes)
        """
        return self._anchors(self.shape)

    def product(self, other, sanity_check=False):
        """
        Grid with the axes of self followed by the axes of other
        """
        assert isinstance(other, CubicalComplex)
        return CubicalComplex(self.shape + other.shape,
                              self.periodic + other.periodic,
                              sanity_check=sanity_check)

    def product_cell(self, other, product, cell_a, cell_b):
        """
        Index in product of the cell cell_a x cell_b
        """
        mask_a, anchor_a = self.cell(*cell_a)
        mask_b, anchor_b = other.cell(*cell_b)
        mask = tuple(mask_a) + tuple(axis + self.axes for axis in mask_b)
        return product.cell_index(mask, tuple(anchor_a) + tuple(anchor_b))

    def describe(self):
        if self.is_torus:
            return {'kind': 'cubical_torus', 'dim': self.axes,
                    'resolution': list(self.shape)}
        return {'kind': 'cubical', 'dim': self.axes,
                'resolution': list(self.shape), 'periodic': list(self.periodic)}


class SimplicialComplex(CellComplex):
    """
    Simplicial complex closed under faces.  Simplices are strictly
    increasing vertex tuples; the global vertex order is the one used by
    the Alexander-Whitney formula.
    """
    kind = 'simplicial'

    def __init__(self, vertices, simplices, sanity_check=True, model=None):
        super(SimplicialComplex, self).__init__(model)
        vertices = int(vertices)
        if vertices < 1:
            raise InputError("vertices: need at least one vertex")
        faces = set((v,) for v in range(vertices))
        for position, simplex in enumerate(simplices):
            simplex = tuple(int(v) for v in simplex)
            if not simplex:
                raise InputError("simplices[%d]: empty simplex" % (position,))
            if any(b <= a for a, b in zip(simplex, simplex[1:])):
                raise InputError("simplices[%d]: vertex list %r must be strictly "
                                 "increasing" % (position, list(simplex)))
            if simplex[0] < 0 or simplex[-1] >= vertices:
                raise InputError("simplices[%d]: vertex out of range 0..%d"
                                 % (position, vertices - 1))
            for size in range(1, len(simplex) + 1):
                faces.update(itertools.combinations(simplex, size))
        top = max(len(face) for face in faces)
        self.simplices = tuple(tuple(sorted(face for face in faces if len(face) == d + 1))
                               for d in range(top))
        self._index = [dict((s, i) for i, s in enumerate(level))
                       for level in self.simplices]
        self._counts = tuple(len(level) for level in self.simplices)
        if sanity_check:
            self.sanity_check()
        LOG.debug("built %r", self)

    def index(self, simplex):
        simplex = tuple(simplex)
        return self._index[len(simplex) - 1][simplex]

    def simplex(self, degree, index):
        return self.simplices[degree][index]

    def _boundary_columns(self, degree):
        lower = self._index[degree - 1]
        columns = []
        for simplex in self.simplices[degree]:
            column = []
            for i in range(len(simplex)):
                face = simplex[:i] + simplex[i + 1:]
                column.append((lower[face], -1 if i % 2 else 1))
            columns.append(sorted(column))
        return columns

    def _compute_cell_vertices(self, degree):
        if not self.simplices[degree]:
            return np.zeros((0, degree + 1), dtype=np.int64)
        return np.asarray(self.simplices[degree], dtype=np.int64)

    def describe(self):
        covered = set()
        for level in self.simplices[1:]:
            for simplex in level:
                covered.update(itertools.combinations(simplex, len(simplex) - 1))
        maximal = [list(s) for level in self.simplices for s in level
                   if s not in covered]
        return {'kind': 'simplicial', 'vertices': self.vertex_count,
                'simplices': maximal}


class Subcomplex(object):
    """
    Face-closed set of cells of a parent complex, one boolean mask per
    degree.
    """
    __slots__ = ('parent', 'masks')

    def __init__(self, parent, masks, check=True):
        masks = [np.asarray(m, dtype=bool).copy() for m in masks]
        while len(masks) < parent.dim + 1:
            masks.append(np.zeros(parent.count(len(masks)), dtype=bool))
        for degree, mask in enumerate(masks):
            if mask.shape != (parent.count(degree),):
                raise InputError("subcomplex: mask of degree %d has shape %r, "
                                 "expected (%d,)" % (degree, mask.shape,
                                                     parent.count(degree)))
            mask.setflags(write=False)
        self.parent = parent
        self.masks = tuple(masks)
        if check:
            for degree in range(1, parent.dim + 1):
                faces = _faces_of(parent, degree, np.flatnonzero(self.masks[degree]))
                if faces.size and not self.masks[degree - 1][faces].all():
                    raise InputError("subcomplex: not closed under faces in "
                                     "degree %d" % (degree,))

    @classmethod
    def full(cls, parent):
        return cls(parent, [np.ones(parent.count(d), dtype=bool)
                            for d in range(parent.dim + 1)], check=False)

    @classmethod
    def empty(cls, parent):
        return cls(parent, [np.zeros(parent.count(d), dtype=bool)
                            for d in range(parent.dim + 1)], check=False)

    @classmethod
    def closure(cls, parent, masks):
        """
        Smallest subcomplex containing the given cells
        """
        masks = [np.asarray(m, dtype=bool).copy() for m in masks]
        while len(masks) < parent.dim + 1:
            masks.append(np.zeros(parent.count(len(masks)), dtype=bool))
        for degree in range(parent.dim, 0, -1):
            faces = _faces_of(parent, degree, np.flatnonzero(masks[degree]))
            masks[degree - 1][faces] = True
        return cls(parent, masks, check=False)

    @classmethod
    def spanned(cls, parent, vertices):
        """
        Full subcomplex on a vertex set: every cell whose vertices all
        belong to it.
        """
        chosen = np.zeros(parent.vertex_count, dtype=bool)
        chosen[np.asarray(list(vertices), dtype=np.int64)] = True
        masks = [chosen[parent.cell_vertices(d)].all(axis=1)
                 for d in range(parent.dim + 1)]
        return cls(parent, masks, check=False)

    def __repr__(self):
        return "Subcomplex%r of %r" % (self.counts, self.parent)

    def __len__(self):
        return sum(self.counts)

    @property
    def counts(self):
        return tuple(int(m.sum()) for m in self.masks)

    @property
    def is_empty(self):
        return not self.masks[0].any()

    def cells(self, degree):
        if degree < 0 or degree >= len(self.masks):
            return np.zeros(0, dtype=np.int64)
        return np.flatnonzero(self.masks[degree])

    def vertices(self):
        return self.cells(0)

    def thicken(self):
        """
        One star step: closure of every cell having a vertex here
        """
        inside = self.masks[0]
        masks = [inside[self.parent.cell_vertices(d)].any(axis=1)
                 for d in range(self.parent.dim + 1)]
        return Subcomplex.closure(self.parent, masks)

    def union(self, other):
        assert other.parent is self.parent
        return Subcomplex(self.parent, [a | b for a, b in zip(self.masks, other.masks)],
                          check=False)


def _faces_of(parent, degree, cells):
    matrix = parent.boundary(degree, F2)
    rows = [row for j in cells for row, _ in matrix.columns[j]]
    return np.unique(np.asarray(rows, dtype=np.int64))


def simplicial_torus(n=3):
    """
    Triangulated n x n torus: each grid square split along its diagonal
    """
    if n < 3:
        raise InputError("resolution: simplicial torus needs n >= 3, got %d" % (n,))

    def vertex(i, j):
        return (i % n) * n + (j % n)
    triangles = []
    for i in range(n):
        for j in range(n):
            v00, v10 = vertex(i, j), vertex(i + 1, j)
            v01, v11 = vertex(i, j + 1), vertex(i + 1, j + 1)
            triangles.append(sorted((v00, v10, v11)))
            triangles.append(sorted((v00, v01, v11)))
    return SimplicialComplex(n * n, triangles, model='simplicial_t2')


def _subdivided_tetrahedron():
    triangles = []
    centre = 4
    for face in itertools.combinations(range(4), 3):
        for edge in itertools.combinations(face, 2):
            triangles.append(list(edge) + [centre])
        centre += 1
    return SimplicialComplex(8, triangles, model='s2')


def builtin(model, resolution=8):
    """
    Built-in closed manifolds: point, s1, t2, t3 (periodic grids with the
    given resolution per axis) and s2 (simplicial).
    """
    model = str(model).lower()
    axes = {'point': 0, 's1': 1, 't2': 2, 't3': 3}
    if model in axes:
        return CubicalComplex((int(resolution),) * axes[model], True, model=model)
    if model == 's2':
        return _subdivided_tetrahedron()
    raise InputError("complex: unknown built-in model %r (expected one of %s)"
                     % (model, ', '.join(BUILTIN_MODELS)))
