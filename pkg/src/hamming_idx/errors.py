class ParameterError(ValueError):
    """An argument is outside the range the code parameters allow."""


class FormatError(ValueError):
    """A framed HAM1 stream is malformed."""
