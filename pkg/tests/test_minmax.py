#!/usr/bin/env python
import numpy as np
import pytest

from lskit.core.complexes import Subcomplex, builtin
from lskit.core.errors import InputError, CapabilityError
from lskit.core.fieldlinalg import F2, QQ
from lskit.core.homology import homology
from lskit.core.minmax import (SampledFunction, FiltrationSweep, c_ls, c_ls_oracle,
                               critical_set, critical_vertices, essential_values,
                               is_homologically_nontrivial, ls_check, sublevel)
from lskit.core.products import intersection_product


def torus_function(n, fn):
	torus = builtin('t2', n)
	q = 2 * np.pi * np.arange(n) / n
	q1, q2 = np.meshgrid(q, q, indexing='ij')
	return SampledFunction(torus, fn(q1, q2))


def cos_q1(n=6):
	return torus_function(n, lambda q1, q2: np.cos(q1))


def two_cosines(n=4):
	return torus_function(n, lambda q1, q2: np.cos(q1) + 2 * np.cos(q2))


def random_function(n=4, seed=0):
	rng = np.random.default_rng(seed)
	torus = builtin('t2', n)
	return SampledFunction(torus, rng.permutation(torus.vertex_count).astype(float))


def test_bad_values():
	torus = builtin('t2', 3)
	with pytest.raises(InputError):
		SampledFunction(torus, np.zeros(8))
	values = np.zeros(9)
	values[4] = np.nan
	with pytest.raises(InputError):
		SampledFunction(torus, values)


def test_sublevel():
	f = cos_q1()
	assert sublevel(f, f.max + 1).counts == f.complex.counts
	assert sublevel(f, f.min).is_empty
	# the circle q1 = pi
	assert sublevel(f, -0.9).counts == (6, 6, 0)
	assert f.tie_radius() == pytest.approx(0.25)


def test_c_ls_cos_q1():
	f = cos_q1()
	hom = homology(f.complex, F2)
	assert c_ls(hom.point(), f) == -1.0
	assert c_ls(hom.basis_class(1, 1), f) == -1.0
	assert c_ls(hom.basis_class(1, 0), f) == 1.0
	assert c_ls(hom.fundamental(), f) == 1.0


def test_essential_values_two_cosines():
	values, table = essential_values(two_cosines(), F2)
	assert values == pytest.approx([-3.0, -1.0, 1.0, 3.0])
	table = dict(table)
	assert table['b1:0'] == pytest.approx(-1.0)
	assert table['b1:1'] == pytest.approx(1.0)


def test_sweep_matches_oracle():
	f = random_function()
	for field in (F2, QQ):
		hom = homology(f.complex, field)
		sweep = FiltrationSweep(f, field)
		for degree in range(3):
			for index in range(hom.betti[degree]):
				cls = hom.basis_class(degree, index)
				assert c_ls(cls, f, field, sweep) == c_ls_oracle(cls, f, field)


def test_shift_and_monotonicity():
	f = random_function(seed=3)
	g = f.shifted(2.5)
	hom = homology(f.complex, F2)
	for cls in hom.classes():
		assert c_ls(cls, g) == pytest.approx(c_ls(cls, f) + 2.5)
	for alpha in hom.classes():
		for beta in hom.classes(1):
			product = intersection_product(alpha, beta)
			if product:
				assert c_ls(product, f) <= c_ls(alpha, f)


def test_zero_class_rejected():
	f = cos_q1()
	with pytest.raises(InputError):
		c_ls(homology(f.complex, F2).zero(1), f)
	with pytest.raises(InputError):
		c_ls(homology(builtin('t2', 4), F2).point(), f)


def test_critical_vertices_two_cosines():
	critical = critical_vertices(two_cosines(), F2)
	assert set(np.flatnonzero(critical)) == set([0, 2, 8, 10])


def test_non_triviality():
	n = 6
	torus = builtin('t2', n)
	single = Subcomplex.spanned(torus, [0])
	report = is_homologically_nontrivial(single, [1])
	assert report['verdict'] == 'trivial'
	assert report['first_failing_radius'] == 1
	circle = Subcomplex.spanned(torus, range(n))
	report = is_homologically_nontrivial(circle, [1, 2])
	assert report['verdict'] == 'nontrivial'
	assert [row['radius'] for row in report['radii']] == [1, 2]
	with pytest.raises(InputError):
		is_homologically_nontrivial(Subcomplex.empty(torus))


def test_ls_check_cos_q1():
	f = cos_q1()
	report = ls_check(f, F2, [1])
	assert report['coincidences']
	assert set(row['value'] for row in report['coincidences']) == set([-1.0, 1.0])
	assert all(row['verdict'] == 'nontrivial' for row in report['coincidences'])
	circle = critical_set(f, 1.0, F2)
	assert circle.counts[0] == 6


def test_ls_check_two_cosines():
	report = ls_check(two_cosines(), F2)
	assert report['coincidences'] == []
	assert report['levels'] == []
	with pytest.raises(CapabilityError):
		ls_check(two_cosines(), QQ)

def test_top_degree_classes():
	circle = builtin('s1', 6)
	f = SampledFunction(circle, np.cos(2 * np.pi * np.arange(6) / 6))
	hom = homology(circle, F2)
	assert c_ls(hom.fundamental(), f) == 1.0
	assert c_ls_oracle(hom.fundamental(), f) == 1.0
	values, _ = essential_values(f, F2)
	assert values == pytest.approx([-1.0, 1.0])
	g = two_cosines()
	for field in (F2, QQ):
		assert c_ls(homology(g.complex, field).fundamental(), g, field) == pytest.approx(3.0)


def test_random_functions():
	rng = np.random.default_rng(2024)
	for trial in range(50):
		complex_ = builtin('s1', 7) if trial % 2 else builtin('t2', 4)
		f = SampledFunction(complex_, rng.integers(0, 6, complex_.vertex_count))
		bump = rng.uniform(0.0, 1.0, complex_.vertex_count)
		g = SampledFunction(complex_, f.values + bump)
		hom = homology(complex_, F2)
		sweep = FiltrationSweep(f, F2)
		low = c_ls(hom.point(), f, F2, sweep)
		high = c_ls(hom.fundamental(), f, F2, sweep)
		for parts in hom.nonzero_sums():
			value = c_ls(parts, f, F2, sweep)
			assert value in f.values
			assert value == c_ls_oracle(parts, f, F2)
			assert low <= value <= high
			moved = c_ls(parts, g)
			assert value <= moved <= value + bump.max()


def test_random_functions_over_rationals():
	rng = np.random.default_rng(17)
	for _ in range(5):
		f = SampledFunction(builtin('t2', 4), rng.permutation(16).astype(float))
		hom = homology(f.complex, QQ)
		sweep = FiltrationSweep(f, QQ)
		for degree in range(3):
			for index in range(hom.betti[degree]):
				cls = hom.basis_class(degree, index)
				assert c_ls(cls, f, QQ, sweep) == c_ls_oracle(cls, f, QQ)


if __name__ == "__main__":
	test_bad_values()
	test_sublevel()
	test_c_ls_cos_q1()
	test_essential_values_two_cosines()
	test_sweep_matches_oracle()
	test_shift_and_monotonicity()
	test_zero_class_rejected()
	test_critical_vertices_two_cosines()
	test_non_triviality()
	test_ls_check_cos_q1()
	test_ls_check_two_cosines()
	test_top_degree_classes()
	test_random_functions()
	test_random_functions_over_rationals()
