"""Exception hierarchy shared by every module of the package."""


class HTWError(Exception):
    """Base class for all errors raised by htwrank."""


class CapExceeded(HTWError):
    pass


class EmptyGenerators(HTWError):
    pass


class NotAMember(HTWError):
    pass


class BadSpec(HTWError):
    pass


class ParseError(HTWError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class DuplicateName(HTWError):
    pass


class LevelMismatch(HTWError):
    pass


class NotAUnit(HTWError):
    pass


class NotMonic(HTWError):
    pass


class InternalError(HTWError):
    """An invariant that the mathematics guarantees did not hold."""


class LiftOutOfRange(InternalError):
    pass


class NonIntegerOmega(InternalError):
    pass


class OddComplexDegree(InternalError):
    pass


class NegativeMargin(InternalError):
    pass
