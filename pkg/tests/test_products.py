#!/usr/bin/env python
import pytest

from lskit.core.complexes import CubicalComplex, builtin, simplicial_torus
from lskit.core.errors import CapabilityError
from lskit.core.fieldlinalg import F2, QQ
from lskit.core.homology import homology
from lskit.core.products import (cross_cycle, cup_length, intersection_form,
                                 intersection_product)


def test_cup_length_of_models():
	expected = {'point': 1, 's1': 2, 's2': 2, 't2': 3, 't3': 4}
	for model, cl in expected.items():
		assert cup_length(builtin(model, 3), F2) == cl


def test_cup_length_simplicial_torus():
	assert cup_length(simplicial_torus(3), F2) == 3


def test_cup_length_needs_finite_field():
	with pytest.raises(CapabilityError):
		cup_length(builtin('t2', 3), QQ)


def test_torus_intersections():
	hom = homology(builtin('t2', 4), F2)
	a, b = hom.basis_class(1, 0), hom.basis_class(1, 1)
	assert intersection_product(a, b) == hom.point()
	assert not intersection_product(a, a)
	assert intersection_product(hom.point(), a) is None
	fund = hom.fundamental()
	assert intersection_product(fund, b) == b


def test_signs_over_rationals():
	hom = homology(builtin('t3', 3), QQ)
	form = intersection_form(hom, 1, 2)
	for (i, j), coefficients in form.items():
		assert all(abs(c) <= 1 for c in coefficients)
	a, b = hom.basis_class(1, 0), hom.basis_class(2, 2)
	ab = intersection_product(a, b)
	ba = intersection_product(b, a)
	assert abs(ab.coefficients[0]) == 1
	assert ab.coefficients[0] == ba.coefficients[0]
	x, y = hom.basis_class(2, 0), hom.basis_class(2, 2)
	xy = intersection_product(x, y)
	yx = intersection_product(y, x)
	assert any(xy.coefficients)
	assert xy.coefficients == tuple(-c for c in yx.coefficients)


def test_no_product_on_open_grid():
	grid = CubicalComplex((3, 3), periodic=False)
	hom = homology(grid, F2)
	with pytest.raises(CapabilityError):
		intersection_product(hom.point(), hom.point())


def test_cross_of_circles_is_fundamental():
	circle = builtin('s1', 4)
	loop = dict((j, 1) for j in range(circle.count(1)))
	product, chain = cross_cycle(circle, 1, loop, circle, 1, loop)
	assert product.shape == (4, 4)
	assert homology(product, F2).from_cycle(2, chain).label == 'fund'


def test_cup_length_stable_under_refinement():
	for model, cl in (('t2', 3), ('t3', 4)):
		assert cup_length(builtin(model, 8), F2) == cl
		assert cup_length(builtin(model, 16), F2) == cl


def test_torus_table_matches_alexander_whitney():
	for complex_ in (builtin('t2', 4), simplicial_torus(3)):
		hom = homology(complex_, F2)
		form = intersection_form(hom, 1, 1)
		assert form == {(0, 0): (0,), (0, 1): (1,), (1, 0): (1,), (1, 1): (0,)}
		fund = hom.fundamental()
		for cls in hom.classes(1):
			assert intersection_product(fund, cls) == cls
			assert intersection_product(cls, fund) == cls
		hom = homology(complex_, QQ)
		form = intersection_form(hom, 1, 1)
		assert form[0, 0] == (0,) and form[1, 1] == (0,)
		assert form[0, 1][0] != 0
		assert form[0, 1][0] == -form[1, 0][0]


def test_cross_with_vertices():
	circle = builtin('s1', 4)
	loop = dict((j, 1) for j in range(circle.count(1)))
	product, chain = cross_cycle(circle, 0, {1: 1}, circle, 0, {2: 1})
	assert chain == {int(product.cell_index((), (1, 2))): 1}
	assert homology(product, F2).from_cycle(0, chain).label == 'pt'
	product, chain = cross_cycle(circle, 1, loop, circle, 0, {0: 1})
	assert homology(product, F2).from_cycle(1, chain).label == 'b1:0'
	product, chain = cross_cycle(circle, 0, {0: 1}, circle, 1, loop)
	assert homology(product, F2).from_cycle(1, chain).label == 'b1:1'


if __name__ == "__main__":
	test_cup_length_of_models()
	test_cup_length_simplicial_torus()
	test_cup_length_needs_finite_field()
	test_torus_intersections()
	test_signs_over_rationals()
	test_no_product_on_open_grid()
	test_cross_of_circles_is_fundamental()
	test_cup_length_stable_under_refinement()
	test_torus_table_matches_alexander_whitney()
	test_cross_with_vertices()
