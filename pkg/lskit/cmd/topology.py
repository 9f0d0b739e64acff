import logging

from ..core.homology import homology
from ..core.inout import load_complex, complex_to_dict
from ..core.plugin import Plugin
from ..core.products import cup_length
from .common import add_complex, add_field, add_out, field_of, Reporting

LOG = logging.getLogger(__name__)


class HomologyCommand(Reporting, Plugin):
    name = 'homology'
    help = 'Betti numbers and canonical basis of a complex'

    def __init__(self):
        self.complex = None
        self.field = None
        self.out = None

    def options(self, parser, env):
        add_complex(parser)
        add_field(parser, env)
        add_out(parser)

    def configure(self, options, conf):
        self.field = field_of(options)
        self.complex = load_complex(options.complex, options.resolution)
        self.out = options.out

    def run(self):
        hom = homology(self.complex, self.field)
        report = {'field': self.field.name, 'betti': list(hom.betti),
                  'complex': complex_to_dict(self.complex, self.field)}
        self.emit(report, self.out, 'betti=%s' % (','.join(str(b) for b in hom.betti),))


class CupLengthCommand(Reporting, Plugin):
    name = 'cuplength'
    help = 'Cup-length of a closed manifold model'

    def __init__(self):
        self.complex = None
        self.field = None
        self.out = None

    def options(self, parser, env):
        add_complex(parser)
        add_field(parser, env)
        add_out(parser)

    def configure(self, options, conf):
        self.field = field_of(options)
        self.complex = load_complex(options.complex, options.resolution)
        self.out = options.out

    def run(self):
        cl = cup_length(self.complex, self.field)
        self.emit({'field': self.field.name, 'cl': cl}, self.out, str(cl))
