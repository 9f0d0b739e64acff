# -*- coding: utf-8 -*-
"""
Finite point clouds in the 1-jet space of a torus, their spectra and
Hausdorff distances.
"""
__all__ = ('FrontCloud', 'Spectrum', 'spectrum', 'default_delta_z',
           'hausdorff', 'directed_hausdorff', 'TWO_PI')

import logging

import numpy as np
from scipy.spatial import cKDTree

from .errors import InputError


LOG = logging.getLogger(__name__)

TWO_PI = 2 * np.pi

# z values closer than this count as one action value
SAME_VALUE = 1e-12


class FrontCloud(object):
    """
    Rows (q_1..q_d, p_1..p_d, z); q is reduced into [0, 2 pi)
    """
    __slots__ = ('points', 'base_dim', 'source')

    def __init__(self, points, base_dim, source='loaded'):
        base_dim = int(base_dim)
        points = np.array(points, dtype=np.float64)
        if points.size == 0:
            points = points.reshape(0, 2 * base_dim + 1)
        if points.ndim != 2 or points.shape[1] != 2 * base_dim + 1:
            raise InputError("cloud: expected rows of %d columns (q, p, z) for base "
                             "dimension %d, got shape %r"
                             % (2 * base_dim + 1, base_dim, points.shape))
        if not np.isfinite(points).all():
            raise InputError("cloud: row %d is not finite"
                             % (int(np.flatnonzero(~np.isfinite(points).all(axis=1))[0]),))
        q = np.mod(points[:, :base_dim], TWO_PI)
        q[q >= TWO_PI] = 0.0
        points[:, :base_dim] = q
        points.setflags(write=False)
        self.points = points
        self.base_dim = base_dim
        self.source = source

    def __repr__(self):
        return "FrontCloud(%d points, d=%d, %s)" % (len(self), self.base_dim, self.source)

    def __len__(self):
        return self.points.shape[0]

    @property
    def q(self):
        return self.points[:, :self.base_dim]

    @property
    def p(self):
        return self.points[:, self.base_dim:2 * self.base_dim]

    @property
    def z(self):
        return self.points[:, -1]

    def near_zero_wall(self, eps_p):
        if not self.base_dim:
            return np.ones(len(self), dtype=bool)
        return np.abs(self.p).max(axis=1) <= eps_p


class Spectrum(object):
    __slots__ = ('values', 'delta_z', 'eps_p')

    def __init__(self, values, delta_z, eps_p):
        self.values = tuple(float(v) for v in values)
        self.delta_z = float(delta_z)
        self.eps_p = float(eps_p)

    def __repr__(self):
        return "Spectrum(%r, delta_z=%g, eps_p=%g)" % (list(self.values), self.delta_z,
                                                      self.eps_p)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def nearest(self, value):
        if not self.values:
            return None
        return min(self.values, key=lambda v: (abs(v - value), v))


def _distinct(z):
    z = np.sort(np.asarray(z, dtype=np.float64))
    if not z.shape[0]:
        return z
    keep = np.concatenate([[True], np.diff(z) > SAME_VALUE])
    return z[keep]


def default_delta_z(cloud, eps_p):
    """
    Half the smallest gap between distinct z of the points near the zero
    wall; 1e-9 when there are fewer than two
    """
    distinct = _distinct(cloud.z[cloud.near_zero_wall(eps_p)])
    if distinct.shape[0] < 2:
        return 1e-9
    return float(np.diff(distinct).min()) / 2.0


def spectrum(cloud, eps_p, delta_z=None):
    """
    z of the points with |p| <= eps_p, single-linkage clustered with gap
    delta_z; each cluster is reported by its midpoint
    """
    eps_p = float(eps_p)
    if eps_p < 0:
        raise InputError("eps_p: must be >= 0, got %r" % (eps_p,))
    if delta_z is None:
        delta_z = default_delta_z(cloud, eps_p)
    delta_z = float(delta_z)
    if not delta_z > 0:
        raise InputError("delta_z: must be positive, got %r" % (delta_z,))
    z = np.sort(cloud.z[cloud.near_zero_wall(eps_p)])
    values = []
    if z.shape[0]:
        breaks = np.flatnonzero(np.diff(z) > delta_z) + 1
        for cluster in np.split(z, breaks):
            values.append((cluster[0] + cluster[-1]) / 2.0)
    LOG.debug("spectrum of %r: %r", cloud, values)
    return Spectrum(values, delta_z, eps_p)


def _embed(clouds):
    """
    Coordinates and box sizes for a periodic tree: q keeps period 2 pi,
    p and z sit in boxes more than twice their spread
    """
    d = clouds[0].base_dim
    stacked = np.vstack([c.points for c in clouds])
    low = stacked[:, d:].min(axis=0)
    spread = stacked[:, d:].max(axis=0) - low
    boxsize = np.concatenate([np.full(d, TWO_PI), 2 * spread + 1.0])
    out = []
    for cloud in clouds:
        points = cloud.points.copy()
        points[:, d:] = points[:, d:] - low
        out.append(points)
    return out, boxsize


def directed_hausdorff(a, b):
    """
    sup over a of the distance to b
    """
    if not len(a) or not len(b):
        raise InputError("cloud: Hausdorff distance needs nonempty clouds")
    if a.base_dim != b.base_dim:
        raise InputError("cloud: base dimensions differ (%d and %d)"
                         % (a.base_dim, b.base_dim))
    (pa, pb), boxsize = _embed([a, b])
    distances, _ = cKDTree(pb, boxsize=boxsize).query(pa)
    return float(distances.max())


def hausdorff(a, b):
    return max(directed_hausdorff(a, b), directed_hausdorff(b, a))
