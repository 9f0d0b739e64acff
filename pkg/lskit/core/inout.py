# -*- coding: utf-8 -*-
"""
File formats: complexes, vertex functions and generating families as
JSON, front clouds and vertex functions as CSV, experiment configs as
TOML, and reports.
"""
from __future__ import print_function

__all__ = ('load_json', 'dump_json', 'load_complex', 'complex_from_dict', 'complex_to_dict',
           'load_function', 'load_family', 'family_from_dict', 'family_to_dict',
           'load_cloud', 'dump_cloud', 'load_config', 'ExperimentConfig', 'write_report',
           'format_report')

import csv
import io
import json
import logging
import os

import numpy as np

try:
    import tomllib
except ImportError:
    import tomli as tomllib

from .complexes import CubicalComplex, SimplicialComplex, builtin, BUILTIN_MODELS
from .errors import InputError
from .fieldlinalg import F2
from .fronts import FrontCloud
from .genfam import GeneratingFamily
from .homology import homology
from .minmax import DEFAULT_LADDER, SampledFunction


LOG = logging.getLogger(__name__)


def _plain(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    return str(value)


def dump_json(obj, handle):
    json.dump(obj, handle, sort_keys=True, indent=2, default=_plain)
    handle.write('\n')


def load_json(path):
    try:
        with io.open(path, 'r', encoding='utf-8') as handle:
            return json.load(handle)
    except (IOError, OSError) as ex:
        raise InputError("%s: cannot read (%s)" % (path, ex))
    except ValueError as ex:
        raise InputError("%s: malformed JSON (%s)" % (path, ex))


def _field(data, key, kind, where, default=None):
    if key not in data:
        if default is not None:
            return default
        raise InputError("%s: missing field %r" % (where, key))
    value = data[key]
    try:
        if kind is list:
            if not isinstance(value, list):
                raise TypeError
            return value
        return kind(value)
    except (TypeError, ValueError):
        raise InputError("%s: field %r must be %s, got %r"
                         % (where, key, kind.__name__, value))


def complex_from_dict(data, where='complex'):
    if not isinstance(data, dict):
        raise InputError("%s: expected an object" % (where,))
    kind = data.get('kind')
    if kind == 'cubical_torus':
        dim = _field(data, 'dim', int, where)
        resolution = _field(data, 'resolution', list, where)
        if len(resolution) != dim:
            raise InputError("%s: field 'resolution' needs %d entries, got %d"
                             % (where, dim, len(resolution)))
        return CubicalComplex(resolution, True)
    if kind == 'cubical':
        resolution = _field(data, 'resolution', list, where)
        periodic = _field(data, 'periodic', list, where)
        return CubicalComplex(resolution, periodic)
    if kind == 'simplicial':
        vertices = _field(data, 'vertices', int, where)
        simplices = _field(data, 'simplices', list, where)
        return SimplicialComplex(vertices, simplices)
    if kind == 'builtin':
        return builtin(_field(data, 'model', str, where),
                       _field(data, 'resolution', int, where, 8))
    raise InputError("%s: field 'kind' must be cubical_torus, cubical, simplicial or "
                     "builtin, got %r" % (where, kind))


def load_complex(name, resolution=8):
    """
    A built-in model id or the path of a complex JSON file
    """
    if str(name).lower() in BUILTIN_MODELS:
        return builtin(name, resolution)
    return complex_from_dict(load_json(name), name)


def _canonical_basis(complex_, field):
    hom = homology(complex_, field)
    out = []
    for degree, basis in enumerate(hom.bases):
        for index, cycle in enumerate(basis):
            entry = {'name': 'b%d:%d' % (degree, index), 'degree': degree}
            if isinstance(complex_, CubicalComplex) and complex_.is_torus:
                entry['axes'] = list(complex_.cell(degree, min(cycle))[0])
            elif isinstance(complex_, CubicalComplex):
                entry['cycle'] = [[[list(part) for part in complex_.cell(degree, cell)],
                                   str(coeff)] for cell, coeff in sorted(cycle.items())]
            else:
                entry['cycle'] = [[list(complex_.simplex(degree, cell)), str(coeff)]
                                  for cell, coeff in sorted(cycle.items())]
            out.append(entry)
    return out


def complex_to_dict(complex_, field=F2):
    out = complex_.describe()
    out['canonical_basis'] = _canonical_basis(complex_, field)
    return out


def load_function(path, complex_):
    """
    CSV rows ``vertex_index,value`` (header optional) or JSON
    ``{"grid": [...]}`` in row-major vertex order
    """
    if str(path).lower().endswith('.json'):
        data = load_json(path)
        if not isinstance(data, dict) or 'grid' not in data:
            raise InputError("%s: missing field 'grid'" % (path,))
        values = np.asarray(data['grid'], dtype=np.float64).reshape(-1)
        return SampledFunction(complex_, values)
    values = np.full(complex_.vertex_count, np.nan)
    for number, row in enumerate(_read_csv(path)):
        if len(row) != 2:
            raise InputError("%s:%d: expected vertex_index,value" % (path, number + 1))
        try:
            vertex, value = int(row[0]), float(row[1])
        except ValueError:
            if number == 0:
                continue
            raise InputError("%s:%d: cannot parse %r" % (path, number + 1, row))
        if not 0 <= vertex < complex_.vertex_count:
            raise InputError("%s:%d: vertex_index %d outside 0..%d"
                             % (path, number + 1, vertex, complex_.vertex_count - 1))
        values[vertex] = value
    missing = np.flatnonzero(np.isnan(values))
    if missing.shape[0]:
        raise InputError("%s: no value for vertex_index %d" % (path, int(missing[0])))
    return SampledFunction(complex_, values)


def _read_csv(path):
    try:
        with io.open(path, 'r', encoding='utf-8', newline='') as handle:
            return [row for row in csv.reader(handle) if row and not row[0].startswith('#')]
    except (IOError, OSError) as ex:
        raise InputError("%s: cannot read (%s)" % (path, ex))


def family_from_dict(data, where='gfqi'):
    if not isinstance(data, dict):
        raise InputError("%s: expected an object" % (where,))
    base = complex_from_dict(_field(data, 'base', dict, where), where + '.base')
    try:
        values = np.asarray(_field(data, 'values', list, where), dtype=np.float64)
    except ValueError:
        raise InputError("%s: field 'values' must be numbers" % (where,))
    axis_signs = data.get('axis_signs')
    return GeneratingFamily(base,
                            _field(data, 'fiber_dim', int, where),
                            _field(data, 'fiber_resolution', int, where),
                            _field(data, 'fiber_box_radius', float, where),
                            _field(data, 'signature', list, where),
                            values,
                            _field(data, 'boundary_tolerance', float, where, 0.0),
                            axis_signs)


def family_to_dict(family):
    return {
        'base': family.base.describe(),
        'fiber_dim': family.fiber_dim,
        'fiber_resolution': family.fiber_resolution,
        'fiber_box_radius': family.radius,
        'signature': list(family.signature),
        'axis_signs': list(family.axis_signs),
        'boundary_tolerance': family.boundary_tolerance,
        'values': family.values.reshape(-1).tolist(),
    }


def load_family(path):
    return family_from_dict(load_json(path), path)


def load_cloud(path, base_dim=None):
    """
    CSV ``q1,...,qd,p1,...,pd,z``; a non-numeric first row is a header
    """
    rows = []
    for number, row in enumerate(_read_csv(path)):
        try:
            rows.append([float(x) for x in row])
        except ValueError:
            if number == 0:
                continue
            raise InputError("%s:%d: cannot parse %r" % (path, number + 1, row))
    width = len(rows[0]) if rows else (2 * base_dim + 1 if base_dim is not None else 1)
    if width % 2 == 0:
        raise InputError("%s: expected 2d+1 columns, got %d" % (path, width))
    if base_dim is not None and width != 2 * base_dim + 1:
        raise InputError("%s: expected %d columns for base dimension %d, got %d"
                         % (path, 2 * base_dim + 1, base_dim, width))
    if any(len(row) != width for row in rows):
        raise InputError("%s: rows have differing column counts" % (path,))
    return FrontCloud(np.asarray(rows, dtype=np.float64).reshape(-1, width),
                      (width - 1) // 2, source=os.path.basename(str(path)))


def dump_cloud(cloud, handle):
    d = cloud.base_dim
    header = ['q%d' % (i + 1) for i in range(d)] + ['p%d' % (i + 1) for i in range(d)] + ['z']
    writer = csv.writer(handle, lineterminator='\n')
    writer.writerow(header)
    for row in cloud.points:
        writer.writerow(['%.17g' % (x,) for x in row])


class ExperimentConfig(object):
    """
    A limit-check experiment: base model, member files in order,
    optional limit file, tolerances and output directory
    """
    __slots__ = ('path', 'base', 'resolution', 'sequence', 'limit', 'eps_p', 'delta_z',
                 'ladder', 'out')

    def __init__(self, path, base, resolution, sequence, limit, eps_p, delta_z, ladder, out):
        self.path = path
        self.base = base
        self.resolution = resolution
        self.sequence = sequence
        self.limit = limit
        self.eps_p = eps_p
        self.delta_z = delta_z
        self.ladder = ladder
        self.out = out

    def __repr__(self):
        return "ExperimentConfig(%r, %d members)" % (self.path, len(self.sequence))


def _positive(data, key, where):
    if key not in data:
        return None
    try:
        value = float(data[key])
    except (TypeError, ValueError):
        raise InputError("%s: %s must be a number, got %r" % (where, key, data[key]))
    if not value > 0:
        raise InputError("%s: %s must be positive, got %r" % (where, key, value))
    return value


def load_config(path):
    try:
        with io.open(path, 'rb') as handle:
            data = tomllib.load(handle)
    except (IOError, OSError) as ex:
        raise InputError("%s: cannot read (%s)" % (path, ex))
    except tomllib.TOMLDecodeError as ex:
        raise InputError("%s: malformed TOML (%s)" % (path, ex))
    folder = os.path.dirname(os.path.abspath(path))

    def resolve(name):
        return name if os.path.isabs(name) else os.path.join(folder, name)

    if 'base' not in data:
        raise InputError("%s: missing key 'base'" % (path,))
    base = str(data['base'])
    if base.lower() not in BUILTIN_MODELS:
        base = resolve(base)
    sequence = data.get('sequence')
    if not isinstance(sequence, list) or not sequence:
        raise InputError("%s: sequence must be a nonempty list of paths" % (path,))
    sequence = [resolve(str(name)) for name in sequence]
    for name in sequence:
        if not os.access(name, os.R_OK):
            raise InputError("%s: sequence entry %s is not readable" % (path, name))
    limit = data.get('limit')
    if limit is not None:
        limit = resolve(str(limit))
        if not os.access(limit, os.R_OK):
            raise InputError("%s: limit %s is not readable" % (path, limit))
    ladder = data.get('ladder', list(DEFAULT_LADDER))
    if not isinstance(ladder, list) or not ladder \
            or any(not isinstance(r, int) or r < 1 for r in ladder):
        raise InputError("%s: ladder must be a list of positive integers, got %r"
                         % (path, ladder))
    resolution = data.get('resolution', 8)
    if not isinstance(resolution, int) or resolution < 3:
        raise InputError("%s: resolution must be an integer >= 3, got %r" % (path, resolution))
    return ExperimentConfig(path, base, resolution, sequence, limit,
                            _positive(data, 'eps_p', path), _positive(data, 'delta_z', path),
                            ladder, resolve(str(data.get('out', 'results'))))


def write_report(folder, report, name='report.json'):
    if not os.path.isdir(folder):
        os.makedirs(folder)
    target = os.path.join(folder, name)
    with io.open(target, 'w', encoding='utf-8') as handle:
        dump_json(report, handle)
    LOG.info("wrote %s", target)
    return target


def format_report(report, keys):
    """
    One ``key=value`` line from the chosen report entries
    """
    parts = []
    for key in keys:
        value = report.get(key)
        if isinstance(value, float):
            value = '%.12g' % (value,)
        elif isinstance(value, (list, tuple)):
            value = ','.join('%.12g' % (v,) if isinstance(v, float) else str(v)
                             for v in value)
        parts.append('%s=%s' % (key, value))
    return ' '.join(parts)
