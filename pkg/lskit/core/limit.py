# -*- coding: utf-8 -*-
"""
Desk-scale check of the few-values principle for Hausdorff limits of
Legendrian fronts: when the limit has fewer spectral values than the
cup-length of the base, some level set of the limit on the zero wall
should be homologically non-trivial.
"""
__all__ = ('verify_arnold_limit', 'level_set')

import logging

import numpy as np

from .complexes import Subcomplex
from .errors import InputError
from .fieldlinalg import F2
from .fronts import FrontCloud, TWO_PI, spectrum, hausdorff, directed_hausdorff
from .genfam import GeneratingFamily, front, ell, default_eps_p
from .homology import homology
from .minmax import DEFAULT_LADDER, is_homologically_nontrivial
from .products import cup_length, intersection_product
from .task import TaskManager


LOG = logging.getLogger(__name__)


def level_set(base, cloud, level, eps_p, delta_z):
    """
    Base vertices nearest to the points with |p| <= eps_p and
    |z - level| <= delta_z, spanned as a subcomplex
    """
    chosen = cloud.near_zero_wall(eps_p) & (np.abs(cloud.z - level) <= delta_z)
    q = cloud.q[chosen]
    if not base.axes:
        vertices = [0] if q.shape[0] else []
    else:
        shape = np.asarray(base.shape)
        grid = np.mod(np.rint(q * shape / TWO_PI).astype(np.int64), shape)
        vertices = np.unique(np.ravel_multi_index(tuple(grid.T), base.shape))
    return Subcomplex.spanned(base, vertices)


def _as_cloud(member):
    if isinstance(member, GeneratingFamily):
        return front(member)
    return member


def _invariants(family, field):
    classes = homology(family.base, field).classes()
    return [(cls, ell(cls, family, field)) for cls in classes]


def verify_arnold_limit(base, sequence, limit=None, eps_p=None, delta_z=None,
                        ladder=DEFAULT_LADDER, field=F2, invariants=True):
    """
    Report on a sequence of families or clouds and its limit cloud.
    ``limit`` defaults to the front of the last member.

    A level counts as nontrivial only when its neighborhood is nontrivial
    at every ladder radius; the verdict is nontrivial when some level is.
    """
    if not sequence:
        raise InputError("sequence: needs at least one member")
    for position, member in enumerate(sequence):
        if isinstance(member, GeneratingFamily):
            if member.base.shape != base.shape:
                raise InputError("sequence[%d]: base grid %r, expected %r"
                                 % (position, member.base.shape, base.shape))
        elif isinstance(member, FrontCloud):
            if member.base_dim != base.axes:
                raise InputError("sequence[%d]: base dimension %d, expected %d"
                                 % (position, member.base_dim, base.axes))
        else:
            raise InputError("sequence[%d]: expected a family or a cloud, got %r"
                             % (position, member))
    families = [m for m in sequence if isinstance(m, GeneratingFamily)]
    if eps_p is None:
        if not families:
            raise InputError("eps_p: required when the sequence has no generating family")
        eps_p = default_eps_p(families[-1])
    clouds = TaskManager.map(_as_cloud, sequence)
    if limit is None:
        limit = clouds[-1]
    elif limit.base_dim != base.axes:
        raise InputError("limit: base dimension %d, expected %d" % (limit.base_dim, base.axes))

    distances = TaskManager.map(lambda cloud: hausdorff(cloud, limit), clouds)
    excess = TaskManager.map(lambda cloud: directed_hausdorff(cloud, limit), clouds)
    monotone = all(b <= a for a, b in zip(distances, distances[1:]))

    spec = spectrum(limit, eps_p, delta_z)
    cl = cup_length(base, field)
    report = {
        'field': field.name,
        'tolerances': {'eps_p': spec.eps_p, 'delta_z': spec.delta_z,
                       'ladder': list(ladder)},
        'members': len(sequence),
        'hausdorff': distances,
        'excess': excess,
        'monotone': monotone,
        'spectrum': list(spec.values),
        'spec_size': len(spec),
        'cl': cl,
        'levels': [],
    }

    if families and invariants:
        tables = TaskManager.map(lambda family: _invariants(family, field), families)
        report['invariants'] = [dict((cls.label, value) for cls, value in table)
                                for table in tables]
        last = dict(tables[-1])
        classes = [cls for cls, _ in tables[-1]]
        nearest = dict((cls, spec.nearest(value)) for cls, value in last.items())
        report['nearest'] = dict((cls.label, value) for cls, value in nearest.items())
        coincidences = []
        for alpha in classes:
            for beta in classes:
                if beta.degree >= base.dim:
                    continue
                product = intersection_product(alpha, beta)
                if product and nearest[product] is not None \
                        and nearest[product] == nearest[alpha]:
                    coincidences.append({'alpha': alpha.label, 'beta': beta.label,
                                         'product': product.label,
                                         'value': nearest[alpha]})
        report['coincidences'] = coincidences

    if len(spec) >= cl:
        report['verdict'] = 'hypothesis-not-met'
        LOG.warning("spectrum has %d values, not fewer than cl = %d", len(spec), cl)
        return report

    found_nontrivial = False
    for level in spec.values:
        subset = level_set(base, limit, level, spec.eps_p, spec.delta_z)
        if subset.is_empty:
            row = {'level': level, 'verdict': 'empty', 'vertices': 0}
        else:
            row = is_homologically_nontrivial(subset, ladder, field)
            row['level'] = level
            row['vertices'] = int(subset.vertices().shape[0])
        found_nontrivial = found_nontrivial or row['verdict'] == 'nontrivial'
        report['levels'].append(row)
    report['verdict'] = 'nontrivial' if found_nontrivial else 'trivial'
    LOG.info("limit check: %d values < cl = %d, verdict %s",
             len(spec), cl, report['verdict'])
    return report
