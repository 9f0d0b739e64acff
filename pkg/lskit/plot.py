# -*- coding: utf-8 -*-
"""
SVG plots: fronts over a circle base in the (q, z) plane with p as hue,
and spectra as tick plots.  Output is byte-stable for equal input.
"""
__all__ = ('plot_front', 'plot_spectrum')

import logging

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

from .core.errors import CapabilityError


LOG = logging.getLogger(__name__)

matplotlib.rcParams['svg.hashsalt'] = 'lskit'
SVG_METADATA = {'Date': None}


def _save(figure, path):
    figure.savefig(path, format='svg', metadata=SVG_METADATA)
    plt.close(figure)
    LOG.info("wrote %s", path)
    return path


def plot_front(cloud, path, title=None):
    if cloud.base_dim != 1:
        raise CapabilityError("plot: fronts are drawn for circle bases only, got "
                              "base dimension %d" % (cloud.base_dim,))
    figure, axes = plt.subplots(figsize=(6, 4))
    points = axes.scatter(cloud.q[:, 0], cloud.z, c=cloud.p[:, 0], cmap='hsv', s=8)
    figure.colorbar(points, ax=axes, label='p')
    axes.set_xlabel('q')
    axes.set_ylabel('z')
    axes.set_xlim(0, 6.283185307179586)
    if title:
        axes.set_title(title)
    return _save(figure, path)


def plot_spectrum(spectrum, path, title=None):
    figure, axes = plt.subplots(figsize=(6, 1.5))
    axes.vlines(list(spectrum.values), 0, 1, colors='k')
    axes.set_yticks([])
    axes.set_xlabel('action')
    if spectrum.values:
        low, high = min(spectrum.values), max(spectrum.values)
        pad = max(1.0, high - low) * 0.1
        axes.set_xlim(low - pad, high + pad)
    if title:
        axes.set_title(title)
    return _save(figure, path)
