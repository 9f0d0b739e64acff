# -*- coding: utf-8 -*-
"""
Generating families quadratic at infinity on torus bases.

A family is sampled on base grid x fiber box.  The fiber box is
[-R, R]^k with m nodes per axis (m odd, so the origin is a node); near
the box boundary the family must agree with the diagonal quadratic form
Q(e) = sum(sign_i * e_i**2) up to the boundary tolerance.

Spectral invariants are min-max values of the lower-star filtration of
the family relative to the exit set N x (faces of the box across the
negative axes); a base class a enters as the cross product of a with
the negative-axes disk.
"""
__all__ = ('GeneratingFamily', 'front', 'ell', 'ell_path', 'oplus', 'gamma',
           'default_eps_p', 'quadratic_form', 'outer_deviation', 'fiber_nodes')

import logging

import numpy as np

from .complexes import CubicalComplex
from .errors import InputError, CapabilityError
from .fieldlinalg import F2
from .fronts import FrontCloud
from .homology import HomologyClass, homology
from .minmax import SampledFunction, FiltrationSweep
from .products import cross_cycle


LOG = logging.getLogger(__name__)

MAX_BASE_DIM = 2


def fiber_nodes(resolution, radius):
    if resolution < 3 or resolution % 2 == 0:
        raise InputError("fiber_resolution: must be odd and >= 3, got %d" % (resolution,))
    centre = (resolution - 1) // 2
    return radius * (np.arange(resolution) - centre) / float(centre)


def quadratic_form(signs, resolution, radius):
    """
    Q on the fiber grid, shape (resolution,) * len(signs)
    """
    nodes = fiber_nodes(resolution, radius)
    out = np.zeros((resolution,) * len(signs), dtype=np.float64)
    for axis, sign in enumerate(signs):
        shape = [1] * len(signs)
        shape[axis] = resolution
        out = out + sign * (nodes ** 2).reshape(shape)
    return out


def outer_deviation(values, signs, resolution, radius):
    """
    max |S - Q| over the outermost fiber layer
    """
    k = len(signs)
    if k == 0:
        return 0.0
    index = np.indices((resolution,) * k)
    outer = ((index == 0) | (index == resolution - 1)).any(axis=0)
    diff = np.abs(values - quadratic_form(signs, resolution, radius))[..., outer]
    return float(diff.max()) if diff.size else 0.0


class GeneratingFamily(object):
    """
    S : N x E -> R sampled on base.shape + (fiber_resolution,) * fiber_dim
    """

    def __init__(self, base, fiber_dim, fiber_resolution, radius, signature, values,
                 boundary_tolerance=0.0, axis_signs=None):
        if not isinstance(base, CubicalComplex) or not base.is_torus:
            raise InputError("base: generating families need a periodic cubical torus")
        if base.axes > MAX_BASE_DIM:
            raise CapabilityError("base: dimension %d, families support tori of "
                                  "dimension <= %d" % (base.axes, MAX_BASE_DIM))
        fiber_dim = int(fiber_dim)
        fiber_resolution = int(fiber_resolution)
        if fiber_dim < 0:
            raise InputError("fiber_dim: must be >= 0, got %d" % (fiber_dim,))
        if fiber_resolution < 3 or fiber_resolution % 2 == 0:
            raise InputError("fiber_resolution: must be odd and >= 3, got %d"
                             % (fiber_resolution,))
        radius = float(radius)
        if not radius > 0:
            raise InputError("fiber_box_radius: must be positive, got %r" % (radius,))
        signature = tuple(int(i) for i in signature)
        if len(signature) != 2 or min(signature) < 0 or sum(signature) != fiber_dim:
            raise InputError("signature: expected [i_minus, i_plus] summing to "
                             "fiber_dim=%d, got %r" % (fiber_dim, list(signature)))
        if axis_signs is None:
            axis_signs = (-1,) * signature[0] + (1,) * signature[1]
        axis_signs = tuple(int(s) for s in axis_signs)
        if len(axis_signs) != fiber_dim or set(axis_signs) - {-1, 1} \
                or axis_signs.count(-1) != signature[0]:
            raise InputError("axis_signs: %r does not match signature %r"
                             % (list(axis_signs), list(signature)))
        shape = base.shape + (fiber_resolution,) * fiber_dim
        values = np.array(values, dtype=np.float64)
        if values.size != int(np.prod(shape, dtype=np.int64)):
            raise InputError("values: expected %d samples for grid %r, got %d"
                             % (int(np.prod(shape, dtype=np.int64)), list(shape), values.size))
        values = values.reshape(shape)
        if not np.isfinite(values).all():
            raise InputError("values: contains non-finite samples")
        boundary_tolerance = float(boundary_tolerance)
        if boundary_tolerance < 0:
            raise InputError("boundary_tolerance: must be >= 0, got %r" % (boundary_tolerance,))
        values.setflags(write=False)
        self.base = base
        self.fiber_dim = fiber_dim
        self.fiber_resolution = fiber_resolution
        self.radius = radius
        self.signature = signature
        self.axis_signs = axis_signs
        self.values = values
        self.boundary_tolerance = boundary_tolerance
        self._total = None
        self._sweeps = {}
        deviation = self.boundary_deviation()
        if deviation > boundary_tolerance:
            raise InputError("boundary_tolerance: outer fiber layer deviates from Q by "
                             "%.6g > %.6g" % (deviation, boundary_tolerance))

    def __repr__(self):
        return "GeneratingFamily(base=%r, fiber=%d^%d, R=%g, signature=%r)" % (
            self.base.shape, self.fiber_resolution, self.fiber_dim, self.radius,
            self.signature)

    @property
    def base_dim(self):
        return self.base.axes

    @property
    def quadratic(self):
        return quadratic_form(self.axis_signs, self.fiber_resolution, self.radius)

    def boundary_deviation(self):
        return outer_deviation(self.values, self.axis_signs, self.fiber_resolution,
                               self.radius)

    def _derived(self, values, tolerance):
        tolerance = max(tolerance, outer_deviation(values, self.axis_signs,
                                                   self.fiber_resolution, self.radius))
        return GeneratingFamily(self.base, self.fiber_dim, self.fiber_resolution,
                                self.radius, self.signature, values, tolerance,
                                self.axis_signs)

    @classmethod
    def split(cls, base, f_values, fiber_dim=1, fiber_resolution=3, radius=1.0,
              signature=None, axis_signs=None):
        """
        S(q, e) = f(q) + Q(e)
        """
        if signature is None:
            signature = (0, fiber_dim)
        f_values = np.asarray(f_values, dtype=np.float64).reshape(base.shape)
        if axis_signs is None:
            axis_signs = (-1,) * signature[0] + (1,) * signature[1]
        q = quadratic_form(axis_signs, fiber_resolution, radius)
        values = f_values.reshape(base.shape + (1,) * fiber_dim) + q
        tolerance = float(np.abs(f_values).max()) if f_values.size else 0.0
        tolerance = max(tolerance, outer_deviation(values, axis_signs,
                                                   fiber_resolution, radius))
        return cls(base, fiber_dim, fiber_resolution, radius, signature, values,
                   tolerance, axis_signs)

    def shifted(self, constant):
        return self._derived(self.values + constant,
                             self.boundary_tolerance + abs(constant))

    def perturbed(self, delta):
        delta = np.asarray(delta, dtype=np.float64).reshape(self.values.shape)
        return self._derived(self.values + delta, self.boundary_tolerance)

    def total_complex(self):
        """
        Base grid times the open fiber grid
        """
        if self._total is None:
            fiber = self.fiber_complex()
            self._total = self.base.product(fiber)
        return self._total

    def fiber_complex(self):
        return CubicalComplex((self.fiber_resolution,) * self.fiber_dim, False,
                              sanity_check=False)

    def exit_masks(self):
        """
        Per degree, cells lying in N x (box faces across a negative axis)
        """
        total = self.total_complex()
        coords = total.vertex_coordinates()
        last = self.fiber_resolution - 1
        negative = [self.base_dim + i for i, s in enumerate(self.axis_signs) if s < 0]
        masks = []
        for degree in range(total.dim + 1):
            verts = total.cell_vertices(degree)
            inside = np.zeros(verts.shape[0], dtype=bool)
            for axis in negative:
                axis_coords = coords[verts, axis]
                inside |= (axis_coords == 0).all(axis=1)
                inside |= (axis_coords == last).all(axis=1)
            masks.append(inside)
        return masks

    def sweep(self, field=F2):
        found = self._sweeps.get(field.name)
        if found is None:
            total = self.total_complex()
            function = SampledFunction(total, self.values.reshape(-1))
            found = FiltrationSweep(function, field, relative=self.exit_masks())
            self._sweeps[field.name] = found
        return found

    def thom_cycle(self, field=F2):
        """
        The negative-axes disk through the centre of the positive axes
        """
        fiber = self.fiber_complex()
        centre = (self.fiber_resolution - 1) // 2
        negative = tuple(i for i, s in enumerate(self.axis_signs) if s < 0)
        span = tuple(self.fiber_resolution - 1 if i in negative else 1
                     for i in range(self.fiber_dim))
        anchors = np.indices(span).reshape(len(span), -1).T if span else \
            np.zeros((1, 0), dtype=np.int64)
        for i in range(self.fiber_dim):
            if i not in negative:
                anchors[:, i] = centre
        cells = np.atleast_1d(fiber.cell_index(negative, anchors))
        return fiber, len(negative), dict((int(c), field.one) for c in cells)

    def lift(self, cls, field=F2):
        """
        Relative cycle a x theta on the total complex
        """
        fiber, index, theta = self.thom_cycle(field)
        _, chain = cross_cycle(self.base, cls.degree, cls.representative,
                               fiber, index, theta, self.total_complex(), field)
        return cls.degree + index, chain


def _check_class(alpha, family):
    parts = (alpha,) if isinstance(alpha, HomologyClass) else tuple(alpha)
    if not any(parts):
        raise InputError("class: spectral invariants are defined on nonzero classes only")
    for part in parts:
        if part.complex is not family.base:
            raise InputError("class %s lives on another base" % (part.label,))
    return [part for part in parts if part]


def ell(alpha, family, field=F2):
    """
    Spectral invariant of a nonzero base class: the smallest value at
    which alpha x theta is carried by the relative sublevel
    """
    parts = _check_class(alpha, family)
    sweep = family.sweep(field)
    out = None
    for part in parts:
        degree, chain = family.lift(part, field)
        found = sweep.carrier_value(degree, chain)
        if found is None:
            raise InputError("class %s vanishes in the family's relative homology"
                             % (part.label,))
        out = found if out is None else max(out, found)
    LOG.debug("ell(%r, %r) = %r", alpha, family, out)
    return out


def ell_path(path, alpha, field=F2):
    """
    Values along a discrete deformation, and whether they stay constant
    """
    if not path:
        raise InputError("path: needs at least one family")
    values = [ell(alpha, family, field) for family in path]
    return {'values': values, 'constant': len(set(values)) == 1}


def gamma(family, field=F2):
    hom = homology(family.base, field)
    return ell(hom.fundamental(), family, field) - ell(hom.point(), family, field)


def oplus(left, right):
    """
    (S + S')(q, e, e') = S(q, e) + S'(q, e') on the product fiber grid
    """
    if left.base.shape != right.base.shape or left.base.periodic != right.base.periodic:
        raise InputError("base: oplus needs identical bases, got %r and %r"
                         % (left.base.shape, right.base.shape))
    if left.fiber_resolution != right.fiber_resolution or left.radius != right.radius:
        raise InputError("fiber_resolution: oplus needs matching fiber grids, got "
                         "%d/R=%g and %d/R=%g" % (left.fiber_resolution, left.radius,
                                                  right.fiber_resolution, right.radius))
    base_shape = left.base.shape
    a = left.values.reshape(left.values.shape + (1,) * right.fiber_dim)
    b = right.values.reshape(base_shape + (1,) * left.fiber_dim
                             + right.values.shape[len(base_shape):])
    values = a + b
    signature = (left.signature[0] + right.signature[0],
                 left.signature[1] + right.signature[1])
    signs = left.axis_signs + right.axis_signs
    fiber_dim = left.fiber_dim + right.fiber_dim
    tolerance = max(left.boundary_tolerance + right.boundary_tolerance,
                    outer_deviation(values, signs, left.fiber_resolution, left.radius))
    return GeneratingFamily(left.base, fiber_dim, left.fiber_resolution, left.radius,
                            signature, values, tolerance, signs)


def _base_steps(family):
    return [2 * np.pi / n for n in family.base.shape]


def default_eps_p(family):
    """
    Twice the central-difference truncation bound h**2/6 * max|S'''|
    along the base axes
    """
    bound = 0.0
    for axis, h in enumerate(_base_steps(family)):
        v = family.values
        third = (np.roll(v, -2, axis) - 2 * np.roll(v, -1, axis)
                 + 2 * np.roll(v, 1, axis) - np.roll(v, 2, axis)) / (2 * h ** 3)
        bound = max(bound, h ** 2 / 6.0 * float(np.abs(third).max()))
    return 2.0 * bound


def _fiber_marks(values, axis, step):
    """
    Interior nodes where the fiber derivative along axis vanishes or
    changes sign
    """
    m = values.shape[axis]
    grad = (np.take(values, range(2, m), axis) - np.take(values, range(0, m - 2), axis)) \
        / (2 * step)
    marks = grad == 0
    if m > 3:
        left = np.take(grad, range(0, m - 3), axis)
        right = np.take(grad, range(1, m - 2), axis)
        change = left * right < 0
        take_left = change & (np.abs(left) <= np.abs(right))
        take_right = change & (np.abs(left) > np.abs(right))
        pad = [(0, 0)] * values.ndim
        pad[axis] = (0, 1)
        marks = marks | np.pad(take_left, pad)
        pad[axis] = (1, 0)
        marks = marks | np.pad(take_right, pad)
    pad = [(0, 0)] * values.ndim
    pad[axis] = (1, 1)
    return np.pad(marks, pad)


def front(family):
    """
    Points (q, dS/dq, S) over the discrete fiber-critical nodes
    """
    values = family.values
    d = family.base_dim
    k = family.fiber_dim
    critical = np.ones(values.shape, dtype=bool)
    if k:
        step = family.radius / ((family.fiber_resolution - 1) // 2)
        for i in range(k):
            critical &= _fiber_marks(values, d + i, step)
    p = [(np.roll(values, -1, axis) - np.roll(values, 1, axis)) / (2 * h)
         for axis, h in enumerate(_base_steps(family))]
    nodes = np.argwhere(critical)
    q = np.stack([2 * np.pi * nodes[:, axis] / n for axis, n in enumerate(family.base.shape)],
                 axis=1) if d else np.zeros((nodes.shape[0], 0))
    index = tuple(nodes.T)
    pv = np.stack([grad[index] for grad in p], axis=1) if d else np.zeros((nodes.shape[0], 0))
    z = values[index].reshape(-1, 1)
    LOG.info("front of %r: %d points", family, nodes.shape[0])
    return FrontCloud(np.hstack([q, pv, z]), d, source='gfqi')
