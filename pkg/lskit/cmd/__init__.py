from .topology import HomologyCommand, CupLengthCommand
from .selector import ClsCommand, EssentialCommand, LsCheckCommand
from .legendrian import (FrontCommand, SpecCommand, EllCommand, GammaCommand,
                         OplusCommand, HausdorffCommand)
from .limit import LimitCheckCommand

__all__ = ('COMMANDS',)

COMMANDS = (HomologyCommand, CupLengthCommand, ClsCommand, EssentialCommand,
            LsCheckCommand, FrontCommand, SpecCommand, EllCommand, GammaCommand,
            OplusCommand, HausdorffCommand, LimitCheckCommand)
