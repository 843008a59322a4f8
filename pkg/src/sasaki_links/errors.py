"""
Exception types for the Sasaki links toolkit.

Every error raised by the library derives from SasakiLinkError, which is a
ValueError so callers that only know about invalid-input errors still work.
"""


class SasakiLinkError(ValueError):
    """Base class for all computation errors."""


class InvalidInputError(SasakiLinkError):
    pass


class InvalidParameterError(SasakiLinkError):
    pass


class NoSolutionError(SasakiLinkError):
    pass


class NotUniqueError(SasakiLinkError):
    pass


class InconsistentSeifertDataError(SasakiLinkError):
    pass


class NullTypeError(SasakiLinkError):
    """|w| = |d|: transversally Calabi-Yau, neither positive nor negative."""


class EuclideanOrbifoldError(SasakiLinkError):
    pass


class PolySyntaxError(SasakiLinkError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotWeightedHomogeneousError(SasakiLinkError):
    pass


class WeightsUndeterminedError(SasakiLinkError):
    pass


class NotIsolatedError(SasakiLinkError):
    pass


class CalculusError(SasakiLinkError):
    pass


class TooLargeError(SasakiLinkError):
    pass


class TypeMismatchError(SasakiLinkError):
    pass


class UnsupportedError(SasakiLinkError):
    pass


class UnknownInvariantError(SasakiLinkError):
    pass
