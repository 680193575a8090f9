class QuasiCartanError(Exception):
    """Base class for every error raised by the library"""


class MatrixFormatError(QuasiCartanError):
    """Malformed matrix input, located by 1-based line and column"""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            location = f'line {line}' if column is None else f'line {line}, column {column}'
            message = f'{location}: {message}'
        super().__init__(message)


class DimensionMismatchError(QuasiCartanError):
    pass


class IndexOutOfRangeError(QuasiCartanError):
    pass


class NotSymmetricBySignsError(QuasiCartanError):
    pass


class NotSymmetrizableError(QuasiCartanError):
    pass


class NotSkewSymmetrizableError(QuasiCartanError):
    pass


class SearchCapExceeded(QuasiCartanError):
    """The companion search used its whole budget without a decision"""

    def __init__(self, cap, tried):
        self.cap = cap
        self.tried = tried
        super().__init__(f'undecided: cap of {cap} assignments reached after {tried} candidates')


class OracleLimitError(QuasiCartanError):
    pass


class WitnessVerificationError(QuasiCartanError):
    """A witness failed re-checking right before it was emitted"""


class ConfigurationError(QuasiCartanError):
    pass
