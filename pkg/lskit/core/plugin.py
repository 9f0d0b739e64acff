import argparse
import logging
import logging.config
import os
import sys

from .errors import LskitError, InputError
from .task import TaskManager

__all__ = ('ArgumentParser', 'Plugin', 'PluginHost')


class ArgumentParser(argparse.ArgumentParser):
    """
    Plugin-friendly argument parser that doesn't sys.exit()...
    """
    def _get_action_from_name(self, name):
        """
        Given a name, get the Action instance registered with this parser.
        """
        if name is None:
            return None
        for action in self._actions:
            if '/'.join(action.option_strings) == name:
                return action
            elif action.metavar == name:
                return action
            elif action.dest == name:
                return action

    def exit(self, status=0, message=None):
        if status:
            raise InputError((message or '').strip() or "invalid arguments")
        raise SystemExit(0)

    def error(self, message):
        exc = sys.exc_info()[1]
        name = getattr(exc, 'argument_name', None)
        action = self._get_action_from_name(name)
        if action is not None and action.option_strings:
            raise InputError("%s: %s" % ('/'.join(action.option_strings), message))
        raise InputError(message)


class Plugin(object):
    """
    A subcommand: contributes options, consumes them, then runs.
    similar to: http://nose.readthedocs.org/en/latest/plugins/writing.html
    """
    __slots__ = ()
    name = None
    help = None

    def options(self, parser, env):
        """
        Add additional program options to the parser

        :type parser: ArgumentParser
        :param env dict: Environment options
        """
        pass

    def configure(self, options, conf):
        """
        Load inputs named by the parsed options

        :param conf dict: Other configuration flags
        """
        pass

    def run(self):
        raise NotImplementedError


class PluginHost(Plugin):
    """
    Hosts a set of subcommand plugins as a command line program:

      * Command line parsing
      * Logging configuration
      * Exit status from the error raised
    """
    __slots__ = ('_plugins', '_plugin', '_options', '_log', '_args', '_prog')

    def __init__(self, plugins, args=None, prog='lskit'):
        assert plugins
        if args is None:
            args = sys.argv[1:]
        self._args = list(args)
        self._log = logging.getLogger()
        self._plugins = dict((plugin.name, plugin) for plugin in plugins)
        self._plugin = None
        self._options = None
        self._prog = prog

    def options(self, parser, env):
        parser.add_argument(
            '-0', '--name', metavar="name", dest='name',
            default=self._prog, help='Change process name to this')
        parser.add_argument('-v', '--verbose', action='store_const',
                            dest="loglevel", const=logging.INFO,
                            help="Log informational messages")
        parser.add_argument('--debug', action='store_const', dest="loglevel",
                            const=logging.DEBUG, default=logging.WARNING,
                            help="Log debugging messages")
        parser.add_argument(
            '-L', '--log-config', metavar="filename", dest='logconfig',
            default=env.get('LOGGING_CONF'), help='Logging configuration file')
        commands = parser.add_subparsers(dest='command', metavar='command',
                                         parser_class=ArgumentParser)
        for name in sorted(self._plugins):
            plugin = self._plugins[name]
            sub = commands.add_parser(name, help=plugin.help, description=plugin.help)
            plugin.options(sub, env)

    def configure(self, options, conf):
        assert options is not None
        self._options = options
        if options.logconfig:
            if not os.access(options.logconfig, os.R_OK):
                raise InputError("-L/--log-config: cannot read %s" % (options.logconfig,))
            logging.config.fileConfig(options.logconfig, disable_existing_loggers=False)
            self._log = logging.getLogger(self._prog)
        else:
            logging.basicConfig(
                level=options.loglevel,
                format='%(asctime)s %(name)-12s %(levelname)-8s %(message)s',
                datefmt='%Y-%m-%d %H:%M')
        try:
            from setproctitle import setproctitle
            setproctitle(options.name)
        except ImportError:
            self._log.debug("Process name unchanged, no setproctitle")
        if not options.command:
            raise InputError("command: expected one of %s" % (', '.join(sorted(self._plugins)),))
        self._plugin = self._plugins[options.command]
        self._plugin.configure(options, conf)

    def run(self):
        return self._plugin.run()

    @classmethod
    def main(cls, plugins, args=None, env=None):
        """
        Parse, configure and run one subcommand; returns the exit status
        """
        host = cls(plugins, args)
        return host.start(env)

    def start(self, env=None):
        if env is None:
            env = dict(os.environ)
        parser = ArgumentParser(prog=self._prog)
        self.options(parser, env)
        try:
            options = parser.parse_args(self._args)
            self.configure(options, {})
            task = TaskManager.spawn(self)
            status = task.get()
        except SystemExit:
            return 0
        except KeyboardInterrupt:
            TaskManager.stopall()
            return 130
        except LskitError as ex:
            self._log.debug("failed", exc_info=True)
            sys.stderr.write("%s: error: %s\n" % (self._prog, ex))
            return ex.exit_status
        except Exception:
            self._log.exception("Failed to run!")
            return 1
        return int(status or 0)
