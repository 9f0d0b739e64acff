#!/usr/bin/env python
import numpy as np
import pytest

from lskit.core.complexes import builtin
from lskit.core.errors import InputError
from lskit.core.fieldlinalg import F2
from lskit.core.genfam import GeneratingFamily, front
from lskit.core.limit import level_set, verify_arnold_limit


N = 8


def grid():
	q = 2 * np.pi * np.arange(N) / N
	return np.meshgrid(q, q, indexing='ij')


def cos_q1_sequence(members=4):
	base = builtin('t2', N)
	q1, q2 = grid()
	f = np.cos(q1)
	g = 0.3 * np.cos(q2)
	sequence = [GeneratingFamily.split(base, f + g / n) for n in range(1, members + 1)]
	limit = front(GeneratingFamily.split(base, f))
	return base, sequence, limit


def test_level_set_is_a_circle():
	base, _, limit = cos_q1_sequence(1)
	circle = level_set(base, limit, 1.0, 0.1, 0.5)
	assert circle.counts == (N, N, 0)
	assert level_set(base, limit, 5.0, 0.1, 0.5).is_empty


def test_cos_q1_limit_is_nontrivial():
	base, sequence, limit = cos_q1_sequence()
	report = verify_arnold_limit(base, sequence, limit=limit, ladder=(1, 2, 3))
	assert report['members'] == 4
	assert report['monotone']
	assert report['hausdorff'][-1] < report['hausdorff'][0]
	assert report['spectrum'] == pytest.approx([-1.0, 1.0])
	assert report['spec_size'] == 2
	assert report['cl'] == 3
	assert [row['verdict'] for row in report['levels']] == ['nontrivial', 'nontrivial']
	assert all(radius['nontrivial'] for row in report['levels'] for radius in row['radii'])
	assert report['verdict'] == 'nontrivial'
	assert len(report['invariants']) == 4
	assert report['nearest']['pt'] == pytest.approx(-1.0)
	assert report['nearest']['fund'] == pytest.approx(1.0)


def test_two_cosines_hypothesis_not_met():
	base = builtin('t2', N)
	q1, q2 = grid()
	family = GeneratingFamily.split(base, np.cos(q1) + 2 * np.cos(q2))
	report = verify_arnold_limit(base, [family], invariants=False)
	assert report['spectrum'] == pytest.approx([-3.0, -1.0, 1.0, 3.0])
	assert report['verdict'] == 'hypothesis-not-met'
	assert report['levels'] == []
	assert 'invariants' not in report


def test_clouds_need_eps_p():
	base, _, limit = cos_q1_sequence(1)
	with pytest.raises(InputError):
		verify_arnold_limit(base, [limit])
	report = verify_arnold_limit(base, [limit], eps_p=0.1, ladder=(1,), field=F2)
	assert report['hausdorff'] == [0.0]
	assert report['verdict'] == 'nontrivial'


def test_sequence_checks():
	base, sequence, limit = cos_q1_sequence(1)
	with pytest.raises(InputError):
		verify_arnold_limit(base, [])
	with pytest.raises(InputError):
		verify_arnold_limit(builtin('t2', 4), sequence)
	with pytest.raises(InputError):
		verify_arnold_limit(base, ['not a front'], eps_p=0.1)


if __name__ == "__main__":
	test_level_set_is_a_circle()
	test_cos_q1_limit_is_nontrivial()
	test_two_cosines_hypothesis_not_met()
	test_clouds_need_eps_p()
	test_sequence_checks()
