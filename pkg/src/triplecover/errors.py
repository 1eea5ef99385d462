"""Exception types shared across the package."""


class TripleCoverError(Exception):
    """Base class for every error raised by this package."""


class NonPrimeModulus(TripleCoverError):
    pass


class SmallCharacteristic(TripleCoverError):
    pass


class FieldMismatch(TripleCoverError):
    pass


class VariableMismatch(TripleCoverError):
    pass


class MissingAssignment(TripleCoverError):
    pass


class UnknownVariable(TripleCoverError):
    pass


class RationalInFiniteField(TripleCoverError):
    pass


class ExpressionSyntaxError(TripleCoverError):
    """Malformed polynomial expression; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class NotOnVariety(TripleCoverError):
    pass


class NotOnGraph(TripleCoverError):
    pass


class NotOnCubicLocus(TripleCoverError):
    pass


class NotOnFiber(TripleCoverError):
    pass


class FiberNotSplit(TripleCoverError):
    pass


class InfiniteFieldUnsupported(TripleCoverError):
    pass


class CoverFileError(TripleCoverError):
    """Malformed cover-spec file; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
