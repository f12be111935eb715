"""Exception hierarchy shared by every limitlab module."""


class LimitLabError(Exception):
    """Base class; the CLI maps these to exit code 1."""


class CapExceeded(LimitLabError):
    def __init__(self, what, value, cap):
        super().__init__(f"{what}={value} exceeds the configured cap of {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class InvalidBits(LimitLabError, ValueError):
    pass


class IndexOutOfRange(LimitLabError, IndexError):
    pass


class EmptyTruncate(LimitLabError):
    pass


class SourceExhausted(LimitLabError):
    pass


class DeadEnd(LimitLabError):
    pass


class MalformedProgram(LimitLabError):
    pass


class ParseError(LimitLabError):
    def __init__(self, position, expected, text=""):
        super().__init__(f"parse error at position {position}: expected {expected}")
        self.position = position
        self.expected = expected
        self.text = text


class UnboundAtom(LimitLabError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"atom {self.name!r} has no assignment"
