#!/usr/bin/env python
import io

import numpy as np
import pytest

from lskit.core.errors import CapabilityError
from lskit.core.fronts import FrontCloud, spectrum
from lskit.plot import plot_front, plot_spectrum


def circle_cloud():
	q = 2 * np.pi * np.arange(8) / 8
	return FrontCloud(np.column_stack([q, -np.sin(q), np.cos(q)]), 1)


def read(path):
	with io.open(str(path), encoding='utf-8') as handle:
		return handle.read()


def test_front_svg_is_stable(tmp_path):
	first = plot_front(circle_cloud(), str(tmp_path / 'a.svg'), title='cos')
	second = plot_front(circle_cloud(), str(tmp_path / 'b.svg'), title='cos')
	assert '<svg' in read(first)
	assert read(first) == read(second)


def test_front_needs_circle_base(tmp_path):
	cloud = FrontCloud(np.zeros((2, 5)), 2)
	with pytest.raises(CapabilityError):
		plot_front(cloud, str(tmp_path / 'c.svg'))


def test_spectrum_svg(tmp_path):
	found = spectrum(circle_cloud(), 0.1)
	path = plot_spectrum(found, str(tmp_path / 'spec.svg'))
	assert '<svg' in read(path)


if __name__ == "__main__":
	import tempfile
	import pathlib
	test_front_svg_is_stable(pathlib.Path(tempfile.mkdtemp()))
	test_front_needs_circle_base(pathlib.Path(tempfile.mkdtemp()))
	test_spectrum_svg(pathlib.Path(tempfile.mkdtemp()))
