"""Exception hierarchy.

``ValidationError`` subclasses describe bad input and map to CLI exit code 1.
``CertificationError`` subclasses mean an internal guarantee was violated
(exit code 2).
"""


class HopfError(Exception):
    pass


class ValidationError(HopfError):
    pass


class CertificationError(HopfError):
    pass


class NotPure(ValidationError):
    pass


class NotClosed(ValidationError):
    def __init__(self, message, ridges=()):
        super().__init__(message)
        self.ridges = list(ridges)


class Disconnected(ValidationError):
    pass


class DegenerateFacet(ValidationError):
    pass


class NonOrientable(ValidationError):
    pass


class DimensionOutOfRange(ValidationError):
    pass


class DegreeMismatch(ValidationError):
    pass


class MixedComplexes(ValidationError):
    pass


class WrongSourceDimension(ValidationError):
    pass


class NotAFacet(ValidationError):
    pass


class LabelingInvalid(ValidationError):
    def __init__(self, message, offending=()):
        super().__init__(message)
        self.offending = list(offending)


class TooFewVertices(ValidationError):
    pass


class RetryBudgetExhausted(HopfError):
    pass


class Inconsistent(CertificationError):
    pass


class NonIntegerPairing(CertificationError):
    pass


class InstanceSyntaxError(ValidationError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class HeaderError(InstanceSyntaxError):
    pass


class MissingLabel(ValidationError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} has no label line")
        self.vertex = vertex


class DuplicateLabel(InstanceSyntaxError):
    def __init__(self, vertex, line=None):
        super().__init__(f"vertex {vertex} labeled more than once", line)
        self.vertex = vertex
