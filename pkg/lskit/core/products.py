# -*- coding: utf-8 -*-
"""
Products on homology: the intersection product of a closed manifold
model, cup-length, Alexander-Whitney cup and cap products on simplicial
complexes, and cubical cross products.
"""
__all__ = ('intersection_product', 'intersection_form', 'cup_length',
           'cup_product', 'cap_product', 'cohomology_dual_basis', 'cross_cycle')

import itertools
import logging

from .complexes import CubicalComplex, SimplicialComplex
from .errors import InputError, CapabilityError
from .fieldlinalg import F2, SparseColumnMatrix, in_image
from .homology import homology


LOG = logging.getLogger(__name__)


def _parity(sequence):
    inversions = sum(1 for a, b in itertools.combinations(sequence, 2) if a > b)
    return -1 if inversions % 2 else 1


def _torus_table(complex_, p, q):
    """
    For coordinate tori T^I (degree p) and T^J (degree q): list, per pair
    of basis indices, of (result index, sign) or None.  T^I . T^J is
    +-T^(I & J) when I | J covers every axis and zero otherwise; signs come
    from Poincare duality with dx^(complement).
    """
    cache = complex_.__dict__.setdefault('_intersection_tables', {})
    table = cache.get((p, q))
    if table is not None:
        return table
    axes = tuple(range(complex_.axes))
    lefts = list(itertools.combinations(axes, p))
    rights = list(itertools.combinations(axes, q))
    results = {}
    if p + q >= len(axes):
        results = dict((mask, i) for i, mask in
                       enumerate(itertools.combinations(axes, p + q - len(axes))))

    def dual_sign(mask):
        rest = tuple(a for a in axes if a not in mask)
        return rest, _parity(rest + mask)

    table = {}
    for i, left in enumerate(lefts):
        for j, right in enumerate(rights):
            if set(left) | set(right) != set(axes):
                continue
            meet = tuple(a for a in left if a in right)
            rest_l, sign_l = dual_sign(left)
            rest_r, sign_r = dual_sign(right)
            rest_m, sign_m = dual_sign(meet)
            sign = sign_l * sign_r * _parity(rest_l + rest_r) * sign_m
            table[i, j] = (results[meet], sign)
    cache[(p, q)] = table
    return table


def _torus_product(a, b):
    hom = a.homology
    field = hom.field
    degree = a.degree + b.degree - hom.complex.dim
    coefficients = [field.zero] * hom.betti[degree]
    table = _torus_table(hom.complex, a.degree, b.degree)
    for (i, j), (k, sign) in table.items():
        coeff = field.mul(field.mul(a.coefficients[i], b.coefficients[j]), field(sign))
        coefficients[k] = field.add(coefficients[k], coeff)
    return hom.cls(degree, coefficients)


def cup_product(complex_, p, phi, q, psi, field):
    """
    Alexander-Whitney: (phi u psi)(v0..v(p+q)) = phi(v0..vp) psi(vp..v(p+q))
    """
    out = {}
    if p + q > complex_.dim:
        return out
    for index, simplex in enumerate(complex_.simplices[p + q]):
        front = phi.get(complex_.index(simplex[:p + 1]))
        if not front:
            continue
        back = psi.get(complex_.index(simplex[p:]))
        if not back:
            continue
        value = field.mul(front, back)
        if value:
            out[index] = value
    return out


def cap_product(complex_, p, phi, n, chain, field):
    """
    sigma n phi = phi(v0..vp) (vp..vn), extended linearly over the chain
    """
    out = {}
    if p > n:
        return out
    for index, coeff in chain.items():
        simplex = complex_.simplices[n][index]
        front = phi.get(complex_.index(simplex[:p + 1]))
        if not front:
            continue
        field.axpy(out, field.mul(coeff, front), {complex_.index(simplex[p:]): field.one})
    return out


def cohomology_dual_basis(hom, degree):
    """
    Cocycles phi_i with phi_i(rep_k) = [i == k] on the homology basis
    """
    complex_ = hom.complex
    field = hom.field
    upper = complex_.boundary(degree + 1, field).transpose()
    reps = SparseColumnMatrix.from_dicts(complex_.count(degree), hom.bases[degree],
                                         field).transpose()
    stacked = upper.vstack(reps) if reps.rows else upper
    out = []
    for i in range(hom.betti[degree]):
        target = {upper.rows + i: field.one}
        found = in_image(stacked, target)
        assert found.member, "homology basis has no dual cocycle"
        out.append(dict((j, c) for j, c in enumerate(found.coefficients) if c))
    return out


class _Duality(object):
    """
    Poincare duality on a simplicial manifold: H^p -> H_(n-p), phi -> [M] n phi
    """

    def __init__(self, hom):
        self.hom = hom
        self.fundamental = hom.fundamental().representative
        self._cocycles = {}
        self._matrices = {}

    def cocycles(self, p):
        found = self._cocycles.get(p)
        if found is None:
            found = cohomology_dual_basis(self.hom, p)
            self._cocycles[p] = found
        return found

    def cap(self, p, phi):
        hom = self.hom
        n = hom.complex.dim
        cycle = cap_product(hom.complex, p, phi, n, self.fundamental, hom.field)
        return hom.coordinates(n - p, cycle)

    def inverse(self, cls):
        """
        A cocycle whose cap with [M] is the class
        """
        hom = self.hom
        p = hom.complex.dim - cls.degree
        matrix = self._matrices.get(p)
        if matrix is None:
            columns = [self.cap(p, phi) for phi in self.cocycles(p)]
            matrix = SparseColumnMatrix(hom.betti[cls.degree], len(columns),
                                        [[(i, c) for i, c in enumerate(col) if c]
                                         for col in columns], hom.field)
            self._matrices[p] = matrix
        found = in_image(matrix, cls.coefficients)
        if not found.member:
            raise CapabilityError("%r is not a closed manifold model" % (hom.complex,))
        phi = {}
        for coeff, cocycle in zip(found.coefficients, self.cocycles(p)):
            hom.field.axpy(phi, coeff, cocycle)
        return p, phi


def _simplicial_product(a, b):
    hom = a.homology
    duality = getattr(hom, '_duality', None)
    if duality is None:
        duality = hom._duality = _Duality(hom)
    p, phi = duality.inverse(a)
    q, psi = duality.inverse(b)
    cup = cup_product(hom.complex, p, phi, q, psi, hom.field)
    return hom.cls(hom.complex.dim - p - q, duality.cap(p + q, cup))


def intersection_product(a, b):
    """
    a . b of degree deg a + deg b - dim M.  None when that degree is
    negative, otherwise a class which may be zero.
    """
    hom = a.homology
    if b.homology is not hom:
        raise InputError("intersection: classes live on different complexes")
    complex_ = hom.complex
    degree = a.degree + b.degree - complex_.dim
    if isinstance(complex_, CubicalComplex) and complex_.is_torus:
        product = _torus_product
    elif isinstance(complex_, SimplicialComplex):
        product = _simplicial_product
    else:
        raise CapabilityError("intersection: no product structure on %r" % (complex_,))
    if degree < 0:
        return None
    return product(a, b)


def intersection_form(hom, p, q):
    """
    Table of products of basis classes: {(i, j): coefficients}
    """
    out = {}
    for i in range(hom.betti[p]):
        for j in range(hom.betti[q]):
            product = intersection_product(hom.basis_class(p, i), hom.basis_class(q, j))
            out[i, j] = product.coefficients if product is not None else ()
    return out


def cup_length(complex_, field):
    """
    Largest k + 1 with a nonzero product of k classes of degree below
    dim M; 1 when there is no such class.
    """
    if not field.finite:
        raise CapabilityError("cup_length: exhaustive search needs a finite field, "
                              "got %r" % (field,))
    hom = homology(complex_, field)
    admissible = [cls for cls in hom.classes() if cls.degree != complex_.dim]
    if not admissible:
        return 1
    memo = {}

    def times(x, y):
        key = (x, y)
        if key not in memo:
            memo[key] = intersection_product(x, y)
        return memo[key]

    length = 2
    current = set(admissible)
    while True:
        following = set()
        for x in current:
            for y in admissible:
                product = times(x, y)
                if product:
                    following.add(product)
        if not following:
            break
        length += 1
        current = following
    LOG.info("cup_length(%r) = %d", complex_, length)
    return length


def cross_cycle(left, p, a, right, q, b, product=None, field=F2):
    """
    Cross product a x b of a p-chain on left and a q-chain on right.
    Returns (product complex, chain); the product grid has the axes of
    left followed by those of right.
    """
    if not isinstance(left, CubicalComplex) or not isinstance(right, CubicalComplex):
        raise CapabilityError("cross_cycle: both factors must be cubical")
    if product is None:
        product = left.product(right)
    elif product.shape != left.shape + right.shape:
        raise InputError("cross_cycle: product grid shape %r does not match %r x %r"
                         % (product.shape, left.shape, right.shape))
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            cell = int(left.product_cell(right, product, (p, i), (q, j)))
            field.axpy(out, field.mul(x, y), {cell: field.one})
    return product, out
