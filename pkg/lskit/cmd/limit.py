import logging

from ..core.errors import HypothesisNotMet
from ..core.inout import load_complex, load_config, load_family, load_cloud
from ..core.limit import verify_arnold_limit
from ..core.plugin import Plugin
from .common import add_field, add_tolerances, field_of, parse_ladder, positive, Reporting

LOG = logging.getLogger(__name__)


def load_member(path, base_dim):
    if str(path).lower().endswith('.json'):
        return load_family(path)
    return load_cloud(path, base_dim)


class LimitCheckCommand(Reporting, Plugin):
    name = 'limit-check'
    help = 'Spectrum, cup-length and level-set verdict for a sequence of fronts'
    summary = ('spec_size', 'cl', 'verdict')

    def __init__(self):
        self.config = None
        self.field = None

    def options(self, parser, env):
        parser.add_argument('--config', metavar='FILE.toml', dest='config', required=True,
                            help='Experiment description')
        add_tolerances(parser)
        add_field(parser, env)
        parser.add_argument('--ladder', metavar='1,2,3', dest='ladder', default=None,
                            help='Override the neighborhood radii of the config')
        parser.add_argument('--out', metavar='DIR', dest='out', default=None,
                            help='Override the output directory of the config')

    def configure(self, options, conf):
        self.field = field_of(options)
        config = load_config(options.config)
        if options.eps_p is not None:
            config.eps_p = positive('--eps-p', options.eps_p)
        if options.delta_z is not None:
            config.delta_z = positive('--delta-z', options.delta_z)
        if options.ladder is not None:
            config.ladder = parse_ladder(options.ladder)
        if options.out is not None:
            config.out = options.out
        self.config = config

    def run(self):
        config = self.config
        base = load_complex(config.base, config.resolution)
        sequence = [load_member(path, base.axes) for path in config.sequence]
        limit = load_cloud(config.limit, base.axes) if config.limit else None
        LOG.info("%r: base %s, field %s", config, base, self.field.name)
        report = verify_arnold_limit(base, sequence, limit=limit, eps_p=config.eps_p,
                                     delta_z=config.delta_z, ladder=config.ladder,
                                     field=self.field)
        report['config'] = config.path
        self.emit(report, config.out)
        if report['verdict'] == 'hypothesis-not-met':
            raise HypothesisNotMet("spectrum has %d values, cup-length is %d"
                                   % (report['spec_size'], report['cl']), report)
