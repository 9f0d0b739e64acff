#!/usr/bin/env python
import pytest

from lskit.core.complexes import CubicalComplex, Subcomplex, builtin, simplicial_torus
from lskit.core.errors import InputError, CapabilityError
from lskit.core.fieldlinalg import F2, QQ
from lskit.core.homology import homology, induced_map, subcomplex_homology


def test_betti_numbers():
	expected = {'point': (1,), 's1': (1, 1), 't2': (1, 2, 1), 't3': (1, 3, 3, 1),
	            's2': (1, 0, 1)}
	for model, betti in expected.items():
		for field in (F2, QQ):
			assert homology(builtin(model, 3), field).betti == betti
	assert homology(simplicial_torus(3), QQ).betti == (1, 2, 1)


def test_open_grid_is_contractible():
	grid = CubicalComplex((3, 3), periodic=False)
	assert homology(grid, F2).betti == (1, 0, 0)


def test_homology_cached():
	torus = builtin('t2', 4)
	assert homology(torus, F2) is homology(torus, F2)
	assert homology(torus, F2) is not homology(torus, QQ)


def test_named_classes():
	hom = homology(builtin('t2', 4), F2)
	assert hom.named('pt').label == 'pt'
	assert hom.named('fund').label == 'fund'
	assert hom.named('b1:1').label == 'b1:1'
	assert hom.named('csv:0,1,0,0') == hom.basis_class(1, 0)
	assert hom.named('csv:0,1,1,0').label == 'b1:(1,1)'
	with pytest.raises(InputError):
		hom.named('csv:1,1,0,0')
	with pytest.raises(InputError):
		hom.named('b3:0')
	with pytest.raises(InputError):
		hom.named('everything')
	with pytest.raises(CapabilityError):
		homology(CubicalComplex((3, 3), periodic=False), F2).fundamental()


def test_class_arithmetic():
	hom = homology(builtin('t2', 4), F2)
	a = hom.basis_class(1, 0)
	assert not (a + a)
	assert (a + hom.basis_class(1, 1)).coefficients == (1, 1)
	assert len(hom.classes()) == 1 + 3 + 1
	assert len(hom.nonzero_sums()) == 2 * 4 * 2 - 1


def test_shifted_loop_is_same_class():
	n = 4
	torus = builtin('t2', n)
	hom = homology(torus, F2)
	cells = torus.cell_index((0,), [(i, 2) for i in range(n)])
	loop = dict((int(c), 1) for c in cells)
	assert hom.from_cycle(1, loop) == hom.basis_class(1, 0)
	with pytest.raises(InputError):
		hom.from_cycle(1, {int(cells[0]): 1})


def test_induced_map_of_circle():
	n = 4
	torus = builtin('t2', n)
	circle = Subcomplex.spanned(torus, [i * n for i in range(n)])
	assert subcomplex_homology(circle, F2).betti == (1, 1, 0)
	matrix = induced_map(circle, torus, 1, F2)
	assert matrix.to_dense() == [[1], [0]]
	assert induced_map(circle, torus, 0, F2).to_dense() == [[1]]


if __name__ == "__main__":
	test_betti_numbers()
	test_open_grid_is_contractible()
	test_homology_cached()
	test_named_classes()
	test_class_arithmetic()
	test_shifted_loop_is_same_class()
	test_induced_map_of_circle()
