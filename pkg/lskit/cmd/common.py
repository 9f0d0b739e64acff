"""
Options and output helpers shared by the subcommands
"""
from __future__ import print_function

import logging
import sys

from ..core.errors import InputError
from ..core.fieldlinalg import field_by_name
from ..core.homology import homology
from ..core.inout import write_report, format_report
from ..core.minmax import DEFAULT_LADDER

LOG = logging.getLogger(__name__)


def number(text):
    return '%.12g' % (text,)


def parse_ladder(text):
    try:
        radii = [int(part) for part in str(text).split(',') if part.strip()]
    except ValueError:
        raise InputError("--ladder: expected comma separated integers, got %r" % (text,))
    if not radii or any(r < 1 for r in radii):
        raise InputError("--ladder: radii must be positive, got %r" % (text,))
    return radii


def positive(flag, value):
    if value is not None and not value > 0:
        raise InputError("%s: must be positive, got %r" % (flag, value))
    return value


def add_field(parser, env):
    parser.add_argument('--field', metavar='f2|q', dest='field',
                        default=env.get('LSKIT_FIELD', 'f2'),
                        help='Coefficient field (default f2)')


def add_complex(parser):
    parser.add_argument('--complex', metavar='FILE|MODEL', dest='complex', required=True,
                        help='Complex JSON file or built-in model (point, s1, t2, t3, s2)')
    parser.add_argument('--resolution', metavar='N', dest='resolution', type=int, default=8,
                        help='Grid resolution of built-in tori (default 8)')


def add_class(parser, required=True):
    parser.add_argument('--class', metavar='NAME', dest='cls', required=required,
                        help='pt, fund, b<degree>:<index> or csv:<coeffs>')


def add_tolerances(parser):
    parser.add_argument('--eps-p', metavar='EPS', dest='eps_p', type=float, default=None,
                        help='Zero-wall threshold on |p| (default: derivative bound)')
    parser.add_argument('--delta-z', metavar='DELTA', dest='delta_z', type=float,
                        default=None, help='Spectrum clustering gap')


def add_ladder(parser):
    parser.add_argument('--ladder', metavar='1,2,3', dest='ladder',
                        default=','.join(str(r) for r in DEFAULT_LADDER),
                        help='Neighborhood radii in star steps')


def add_out(parser, what='DIR'):
    parser.add_argument('--out', metavar=what, dest='out', default=None,
                        help='Write the report (or data) here')


def field_of(options):
    return field_by_name(options.field)


def named_class(complex_, field, name):
    return homology(complex_, field).named(name)


class Reporting(object):
    """
    Mixin: print one summary line, write report.json under --out
    """
    summary = ()

    def emit(self, report, out=None, line=None, stream=None):
        stream = stream or sys.stdout
        report.setdefault('tolerances', {})
        if line is None:
            line = format_report(report, self.summary)
        print(line, file=stream)
        if out:
            write_report(out, report)
        return report
