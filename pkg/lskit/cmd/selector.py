import logging

from ..core.inout import load_complex, load_function
from ..core.minmax import c_ls, essential_values, ls_check
from ..core.plugin import Plugin
from .common import (add_complex, add_class, add_field, add_ladder, add_out, field_of,
                     named_class, number, parse_ladder, Reporting)

LOG = logging.getLogger(__name__)


class _FunctionCommand(Reporting, Plugin):
    def __init__(self):
        self.complex = None
        self.function = None
        self.field = None
        self.out = None

    def options(self, parser, env):
        add_complex(parser)
        parser.add_argument('--function', metavar='FILE', dest='function', required=True,
                            help='Vertex values: CSV vertex_index,value or JSON grid')
        add_field(parser, env)
        add_out(parser)

    def configure(self, options, conf):
        self.field = field_of(options)
        self.complex = load_complex(options.complex, options.resolution)
        self.function = load_function(options.function, self.complex)
        self.out = options.out


class ClsCommand(_FunctionCommand):
    name = 'cls'
    help = 'Min-max critical value c_LS(class, f)'

    def options(self, parser, env):
        super(ClsCommand, self).options(parser, env)
        add_class(parser)

    def configure(self, options, conf):
        super(ClsCommand, self).configure(options, conf)
        self.cls = named_class(self.complex, self.field, options.cls)

    def run(self):
        value = c_ls(self.cls, self.function, self.field)
        self.emit({'field': self.field.name, 'class': self.cls.label, 'value': value},
                  self.out, number(value))


class EssentialCommand(_FunctionCommand):
    name = 'essential'
    help = 'Distinct min-max values over every nonzero class'

    def run(self):
        values, table = essential_values(self.function, self.field)
        report = {'field': self.field.name, 'values': values,
                  'table': [{'class': label, 'value': value} for label, value in table]}
        self.emit(report, self.out, 'values=%s' % (','.join(number(v) for v in values),))


class LsCheckCommand(_FunctionCommand):
    name = 'ls-check'
    help = 'Coincident min-max values and non-triviality of their critical sets'

    def options(self, parser, env):
        super(LsCheckCommand, self).options(parser, env)
        add_ladder(parser)

    def configure(self, options, conf):
        super(LsCheckCommand, self).configure(options, conf)
        self.ladder = parse_ladder(options.ladder)

    def run(self):
        report = ls_check(self.function, self.field, self.ladder)
        report['field'] = self.field.name
        report['tolerances'] = {'ladder': self.ladder, 'tie_radius': report.pop('tie_radius')}
        verdicts = ','.join('%s@%s' % (row['verdict'], number(row['value']))
                            for row in report['coincidences'])
        self.emit(report, self.out, 'coincidences=%d verdicts=%s'
                  % (len(report['coincidences']), verdicts or '-'))
