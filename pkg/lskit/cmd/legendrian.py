from __future__ import print_function

import io
import logging
import sys

from ..core.errors import InputError
from ..core.fronts import spectrum, hausdorff, directed_hausdorff
from ..core.genfam import front, ell, gamma, oplus, default_eps_p
from ..core.inout import load_family, load_cloud, dump_cloud, dump_json, family_to_dict
from ..core.plugin import Plugin
from .common import (add_class, add_field, add_out, add_tolerances, field_of, named_class,
                     number, positive, Reporting)

LOG = logging.getLogger(__name__)


def _add_gfqi(parser, repeat=False, required=True):
    if repeat:
        parser.add_argument('--gfqi', metavar='FILE', dest='gfqi', action='append',
                            default=[], help='Generating family JSON (repeatable)')
    else:
        parser.add_argument('--gfqi', metavar='FILE', dest='gfqi', required=required,
                            help='Generating family JSON')


def _add_svg(parser):
    parser.add_argument('--svg', metavar='PATH', dest='svg', default=None,
                        help='Also draw an SVG plot')


class FrontCommand(Plugin):
    name = 'front'
    help = 'Front cloud (q, p, z) of a generating family'

    def __init__(self):
        self.family = None
        self.out = None
        self.svg = None

    def options(self, parser, env):
        _add_gfqi(parser)
        add_out(parser, 'FILE.csv')
        _add_svg(parser)

    def configure(self, options, conf):
        self.family = load_family(options.gfqi)
        self.out = options.out
        self.svg = options.svg

    def run(self):
        cloud = front(self.family)
        if self.out:
            with io.open(self.out, 'w', encoding='utf-8', newline='') as handle:
                dump_cloud(cloud, handle)
        else:
            dump_cloud(cloud, sys.stdout)
        if self.svg:
            from ..plot import plot_front
            plot_front(cloud, self.svg)


class SpecCommand(Reporting, Plugin):
    name = 'spec'
    help = 'Spectrum: clustered z values of the front on the zero wall'

    def __init__(self):
        self.cloud = None
        self.eps_p = None
        self.delta_z = None
        self.out = None
        self.svg = None

    def options(self, parser, env):
        _add_gfqi(parser, required=False)
        parser.add_argument('--cloud', metavar='FILE', dest='cloud', default=None,
                            help='Front cloud CSV')
        add_tolerances(parser)
        add_out(parser)
        _add_svg(parser)

    def configure(self, options, conf):
        if bool(options.gfqi) == bool(options.cloud):
            raise InputError("--gfqi/--cloud: give exactly one input")
        self.eps_p = positive('--eps-p', options.eps_p)
        self.delta_z = positive('--delta-z', options.delta_z)
        if options.gfqi:
            family = load_family(options.gfqi)
            self.cloud = front(family)
            if self.eps_p is None:
                self.eps_p = default_eps_p(family)
        else:
            self.cloud = load_cloud(options.cloud)
            if self.eps_p is None:
                raise InputError("--eps-p: required when the input is a cloud")
        self.out = options.out
        self.svg = options.svg

    def run(self):
        found = spectrum(self.cloud, self.eps_p, self.delta_z)
        report = {'field': None, 'spectrum': list(found.values),
                  'tolerances': {'eps_p': found.eps_p, 'delta_z': found.delta_z}}
        self.emit(report, self.out,
                  'spectrum=%s' % (','.join(number(v) for v in found.values),))
        if self.svg:
            from ..plot import plot_spectrum
            plot_spectrum(found, self.svg)


class EllCommand(Reporting, Plugin):
    name = 'ell'
    help = 'Spectral invariant ell(class, S) of a generating family'

    def __init__(self):
        self.family = None
        self.field = None
        self.cls = None
        self.out = None

    def options(self, parser, env):
        _add_gfqi(parser)
        add_class(parser)
        add_field(parser, env)
        add_out(parser)

    def configure(self, options, conf):
        self.field = field_of(options)
        self.family = load_family(options.gfqi)
        self.cls = named_class(self.family.base, self.field, options.cls)
        self.out = options.out

    def run(self):
        value = ell(self.cls, self.family, self.field)
        report = {'field': self.field.name, 'class': self.cls.label, 'value': value,
                  'tolerances': {'boundary_tolerance': self.family.boundary_tolerance}}
        self.emit(report, self.out, number(value))


class GammaCommand(Reporting, Plugin):
    name = 'gamma'
    help = 'ell([N], S) - ell([pt], S)'

    def __init__(self):
        self.family = None
        self.field = None
        self.out = None

    def options(self, parser, env):
        _add_gfqi(parser)
        add_field(parser, env)
        add_out(parser)

    def configure(self, options, conf):
        self.field = field_of(options)
        self.family = load_family(options.gfqi)
        self.out = options.out

    def run(self):
        value = gamma(self.family, self.field)
        report = {'field': self.field.name, 'gamma': value,
                  'tolerances': {'boundary_tolerance': self.family.boundary_tolerance}}
        self.emit(report, self.out, number(value))


class OplusCommand(Plugin):
    name = 'oplus'
    help = 'Sum of two generating families over the same base'

    def __init__(self):
        self.families = None
        self.out = None

    def options(self, parser, env):
        _add_gfqi(parser, repeat=True)
        add_out(parser, 'FILE.json')

    def configure(self, options, conf):
        if len(options.gfqi) != 2:
            raise InputError("--gfqi: oplus needs exactly two families, got %d"
                             % (len(options.gfqi),))
        self.families = [load_family(path) for path in options.gfqi]
        self.out = options.out

    def run(self):
        data = family_to_dict(oplus(*self.families))
        if self.out:
            with io.open(self.out, 'w', encoding='utf-8') as handle:
                dump_json(data, handle)
        else:
            dump_json(data, sys.stdout)


class HausdorffCommand(Reporting, Plugin):
    name = 'hausdorff'
    help = 'Hausdorff distance between two front clouds'

    def __init__(self):
        self.clouds = None
        self.out = None

    def options(self, parser, env):
        parser.add_argument('--cloud', metavar='FILE', dest='cloud', action='append',
                            default=[], help='Front cloud CSV (repeatable)')
        _add_gfqi(parser, repeat=True)
        add_out(parser)

    def configure(self, options, conf):
        clouds = [load_cloud(path) for path in options.cloud]
        clouds += [front(load_family(path)) for path in options.gfqi]
        if len(clouds) != 2:
            raise InputError("--cloud/--gfqi: hausdorff needs exactly two inputs, got %d"
                             % (len(clouds),))
        self.clouds = clouds
        self.out = options.out

    def run(self):
        a, b = self.clouds
        distance = hausdorff(a, b)
        report = {'field': None, 'hausdorff': distance,
                  'directed': [directed_hausdorff(a, b), directed_hausdorff(b, a)]}
        self.emit(report, self.out, number(distance))
