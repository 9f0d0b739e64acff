#!/usr/bin/env python
import io
import json

import numpy as np
import pytest

from lskit.core.complexes import CubicalComplex, SimplicialComplex, builtin
from lskit.core.errors import InputError
from lskit.core.fieldlinalg import F2
from lskit.core.fronts import FrontCloud
from lskit.core.genfam import GeneratingFamily
from lskit.core.inout import (complex_from_dict, complex_to_dict, dump_cloud, dump_json,
                              family_from_dict, family_to_dict, format_report, load_cloud,
                              load_complex, load_config, load_family, load_function,
                              write_report)


def test_complex_kinds():
	torus = complex_from_dict({'kind': 'cubical_torus', 'dim': 2, 'resolution': [3, 4]})
	assert isinstance(torus, CubicalComplex) and torus.shape == (3, 4)
	grid = complex_from_dict({'kind': 'cubical', 'resolution': [3], 'periodic': [False]})
	assert grid.counts == (3, 2)
	triangle = complex_from_dict({'kind': 'simplicial', 'vertices': 3,
	                              'simplices': [[0, 1], [1, 2], [0, 2]]})
	assert isinstance(triangle, SimplicialComplex) and triangle.counts == (3, 3)
	assert complex_from_dict({'kind': 'builtin', 'model': 's2'}).counts == (8, 18, 12)
	with pytest.raises(InputError):
		complex_from_dict({'kind': 'cubical_torus', 'dim': 3, 'resolution': [3, 3]})
	with pytest.raises(InputError):
		complex_from_dict({'kind': 'moebius'})
	with pytest.raises(InputError):
		complex_from_dict({'kind': 'simplicial', 'vertices': 'many', 'simplices': []})


def test_complex_description():
	described = complex_to_dict(builtin('t2', 3), F2)
	assert described['kind'] == 'cubical_torus'
	names = [entry['name'] for entry in described['canonical_basis']]
	assert names == ['b0:0', 'b1:0', 'b1:1', 'b2:0']
	assert described['canonical_basis'][2]['axes'] == [1]
	sphere = complex_to_dict(builtin('s2'), F2)
	assert [entry['degree'] for entry in sphere['canonical_basis']] == [0, 2]


def test_load_complex_file(tmp_path):
	path = tmp_path / 'circle.json'
	path.write_text(u'{"kind": "cubical_torus", "dim": 1, "resolution": [5]}')
	assert load_complex(str(path)).counts == (5, 5)
	assert load_complex('T2', 3).counts == (9, 18, 9)
	broken = tmp_path / 'broken.json'
	broken.write_text(u'{"kind": ')
	with pytest.raises(InputError):
		load_complex(str(broken))
	with pytest.raises(InputError):
		load_complex(str(tmp_path / 'missing.json'))


def test_load_function(tmp_path):
	circle = builtin('s1', 3)
	csv_path = tmp_path / 'f.csv'
	csv_path.write_text(u'vertex_index,value\n2,0.5\n0,-1\n1,2\n')
	f = load_function(str(csv_path), circle)
	assert list(f.values) == [-1.0, 2.0, 0.5]
	json_path = tmp_path / 'f.json'
	json_path.write_text(u'{"grid": [1, 2, 3]}')
	assert list(load_function(str(json_path), circle).values) == [1.0, 2.0, 3.0]
	csv_path.write_text(u'0,1\n1,2\n')
	with pytest.raises(InputError):
		load_function(str(csv_path), circle)
	csv_path.write_text(u'0,1\n1,2\n7,3\n')
	with pytest.raises(InputError):
		load_function(str(csv_path), circle)


def test_family_dict(tmp_path):
	base = builtin('s1', 4)
	family = GeneratingFamily.split(base, [0.0, 1.0, 0.0, -1.0], signature=(1, 0))
	data = family_to_dict(family)
	assert data['base'] == {'kind': 'cubical_torus', 'dim': 1, 'resolution': [4]}
	assert data['signature'] == [1, 0]
	path = tmp_path / 'family.json'
	with io.open(str(path), 'w', encoding='utf-8') as handle:
		dump_json(data, handle)
	loaded = load_family(str(path))
	assert loaded.signature == (1, 0)
	assert np.array_equal(loaded.values, family.values)
	data['signature'] = [1]
	with pytest.raises(InputError):
		family_from_dict(data)
	data['signature'] = [1, 0]
	del data['values']
	with pytest.raises(InputError):
		family_from_dict(data)


def test_clouds(tmp_path):
	cloud = FrontCloud([[0.0, 0.5, 1.0], [1.0, -0.5, 2.0]], 1)
	buf = io.StringIO()
	dump_cloud(cloud, buf)
	assert buf.getvalue().splitlines()[0] == 'q1,p1,z'
	path = tmp_path / 'cloud.csv'
	path.write_text(buf.getvalue())
	loaded = load_cloud(str(path))
	assert loaded.base_dim == 1
	assert np.array_equal(loaded.points, cloud.points)
	with pytest.raises(InputError):
		load_cloud(str(path), base_dim=2)
	path.write_text(u'0,1\n')
	with pytest.raises(InputError):
		load_cloud(str(path))


def test_config(tmp_path):
	(tmp_path / 'a.json').write_text(u'{}')
	(tmp_path / 'b.csv').write_text(u'0,0,0\n')
	config = tmp_path / 'experiment.toml'
	config.write_text(u'base = "t2"\nresolution = 6\nsequence = ["a.json", "b.csv"]\n'
	                  u'eps_p = 0.2\nladder = [1, 2]\nout = "results"\n')
	loaded = load_config(str(config))
	assert loaded.base == 't2'
	assert loaded.resolution == 6
	assert loaded.sequence == [str(tmp_path / 'a.json'), str(tmp_path / 'b.csv')]
	assert loaded.limit is None
	assert loaded.eps_p == 0.2 and loaded.delta_z is None
	assert loaded.ladder == [1, 2]
	assert loaded.out == str(tmp_path / 'results')
	config.write_text(u'base = "t2"\nsequence = ["a.json", "c.csv"]\n')
	with pytest.raises(InputError):
		load_config(str(config))
	config.write_text(u'base = "t2"\nsequence = ["a.json"]\neps_p = -1\n')
	with pytest.raises(InputError):
		load_config(str(config))
	config.write_text(u'sequence = ')
	with pytest.raises(InputError):
		load_config(str(config))


def test_reports(tmp_path):
	target = write_report(str(tmp_path / 'out'), {'cl': 3, 'values': np.array([1.5, 2.0])})
	with io.open(target, encoding='utf-8') as handle:
		assert json.load(handle) == {'cl': 3, 'values': [1.5, 2.0]}
	line = format_report({'spec_size': 2, 'cl': 3, 'verdict': 'nontrivial'},
	                     ('spec_size', 'cl', 'verdict'))
	assert line == 'spec_size=2 cl=3 verdict=nontrivial'


if __name__ == "__main__":
	import tempfile
	import pathlib
	test_complex_kinds()
	test_complex_description()
	for test in (test_load_complex_file, test_load_function, test_family_dict, test_clouds,
	             test_config, test_reports):
		test(pathlib.Path(tempfile.mkdtemp()))
