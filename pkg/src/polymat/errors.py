class PolymatError(Exception):
    pass


class VariableMismatchError(PolymatError, ValueError):
    pass


class ImproperIdealError(PolymatError, ValueError):
    """Raised when a zero or unit ideal reaches an operation that needs a proper nonzero ideal."""


class NotPolymatroidalError(PolymatError, ValueError):
    pass


class PresentationError(PolymatError, RuntimeError):
    """No prime-power presentation exists within the exponent bound."""


class HypothesisError(PolymatError, ValueError):
    """The hypotheses of a structural statement do not hold for the given input."""


class BudgetExceeded(PolymatError):
    pass
