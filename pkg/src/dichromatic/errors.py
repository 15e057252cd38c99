"""Exception hierarchy shared by every module."""


class DichromaticError(Exception):
    """Base class for library errors."""


class InvalidArgument(DichromaticError, ValueError):
    pass


class PreconditionViolation(DichromaticError):
    pass


class NotTransitiveTournament(PreconditionViolation):
    pass


class ClassViolation(PreconditionViolation):
    """Input digraph contains a forbidden induced pattern.

    ``pattern`` is the pattern name (or a vertex description) and ``witness``
    maps pattern vertices to host vertices when one is available.
    """

    def __init__(self, message, pattern=None, witness=None, vertex=None):
        super().__init__(message)
        self.pattern = pattern
        self.witness = witness
        self.vertex = vertex


class OracleMisbehavior(DichromaticError):
    """A HeroOracle returned a coloring that breaks its own contract."""


class InternalInconsistency(DichromaticError):
    pass


class SizeLimitExceeded(DichromaticError):
    pass


class ParseError(DichromaticError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
