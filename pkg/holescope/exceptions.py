class HoleScopeError(Exception):
    """Base class for all holescope errors."""

    def __init__(self, message):
        self.message = message
        super().__init__(message)

    def __str__(self):
        return self.message


class ParameterInvalidError(HoleScopeError):
    """Raised when an argument is outside the range an operation accepts."""

    def __init__(self, parameter, value, hint=None):
        self.parameter = parameter
        self.value = value
        self.message = (
            f'Invalid `{parameter}` parameter: {value}. {hint}'
            if hint
            else f'Invalid `{parameter}` parameter: {value}.'
        )
        super().__init__(self.message)


class ModelValidationError(HoleScopeError):
    """Raised when a coefficient profile violates a model invariant."""

    def __init__(self, family: str, reason: str, index: int | None = None):
        self.family = family
        self.reason = reason
        self.index = index
        where = f' at n={index}' if index is not None else ''
        self.message = f'Coefficient model `{family}` rejected{where}: {reason}'
        super().__init__(self.message)


class SupportExhaustedError(HoleScopeError):
    """Raised when a search runs past the model's support hint."""

    def __init__(self, r: float, limit: int):
        self.r = r
        self.limit = limit
        self.message = (
            f'Support hint n={limit} exhausted at r={r!r} before the maximal term '
            'was bracketed. Raise the model radius range or use a smaller radius.'
        )
        super().__init__(self.message)


class DegenerateProfileError(HoleScopeError):
    """Raised when log mu(r) = 0, so the band thresholds collapse."""

    def __init__(self, r: float, quantity: str):
        self.r = r
        self.quantity = quantity
        self.message = (
            f'{quantity} is undefined at r={r!r}: log mu(r) = 0 and the tail '
            'bands collapse.'
        )
        super().__init__(self.message)


class EstimatorError(HoleScopeError):
    """Raised when an estimator cannot produce a result."""
