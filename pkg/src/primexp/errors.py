"""Exception hierarchy shared across the package."""


class PrimexpError(Exception):
    """Base class for all errors raised by primexp."""


class InvalidOrderError(PrimexpError, ValueError):
    """Matrix order or last-row specification is malformed."""


class InvalidParameterError(PrimexpError, ValueError):
    pass


class ImprimitiveError(PrimexpError):
    """An operation that needs a primitive matrix received an imprimitive one."""


class StructuralError(ImprimitiveError):
    """Structural parameters are undefined (no odd cycle through vertex n)."""


class FormulaInconsistencyError(PrimexpError):
    """The closed-form dispatch fell through every clause."""


class CensusTooLargeError(PrimexpError, ValueError):
    pass
