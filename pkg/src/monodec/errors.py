"""Exception hierarchy shared by every module."""


class MonodecError(Exception):
    """Base class for all domain errors raised by monodec."""


class DimensionError(MonodecError, ValueError):
    pass


class ExponentOverflowError(MonodecError, OverflowError):
    pass


class ImproperIdealError(MonodecError, ValueError):
    """A generator equal to 1 would make the ideal the whole ring."""


class ZeroIdealError(MonodecError, ValueError):
    pass


class NotSquarefreeError(MonodecError, ValueError):
    pass


class ParseError(MonodecError, ValueError):
    def __init__(self, message, text=None, pos=None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)
