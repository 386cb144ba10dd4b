class LPMError(Exception):
    """Base class for all errors raised by lpmpoly."""


class ParseError(LPMError, ValueError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class ShapeError(LPMError, ValueError):
    pass


class OrderingError(LPMError, ValueError):
    pass


class DomainError(LPMError, ValueError):
    pass


class EmptyBasisError(LPMError, ValueError):
    pass


class ResourceError(LPMError, RuntimeError):
    pass


class EulerianError(LPMError, ArithmeticError):
    pass
