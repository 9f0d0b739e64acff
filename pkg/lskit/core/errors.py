__all__ = ('LskitError', 'InputError', 'CapabilityError', 'HypothesisNotMet')


class LskitError(Exception):
    """
    Base class of every error raised on purpose by lskit
    """
    exit_status = 1


class InputError(LskitError, ValueError):
    """
    Malformed, inconsistent or out of range input; the message names
    the offending field.
    """
    exit_status = 1


class CapabilityError(LskitError):
    """
    The model or field does not support the requested operation
    """
    exit_status = 2


class HypothesisNotMet(LskitError):
    exit_status = 3

    def __init__(self, message, report=None):
        super(HypothesisNotMet, self).__init__(message)
        self.report = report
