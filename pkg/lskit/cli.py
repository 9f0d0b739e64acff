import sys

from .cmd import COMMANDS
from .core.plugin import PluginHost


def main(args=None):
    sys.exit(PluginHost.main([cls() for cls in COMMANDS], args))


if __name__ == "__main__":
    main()
