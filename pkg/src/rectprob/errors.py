"""Exception types raised by rectprob."""


class ValidationError(ValueError):
    """Invalid input. ``parameter`` names the offending argument when known."""

    code = "invalid"

    def __init__(self, message: str, parameter: str | None = None):
        super().__init__(message)
        self.message = message
        self.parameter = parameter

    def __str__(self) -> str:
        if self.parameter:
            return f"{self.parameter}: {self.message}"
        return self.message


class ZeroProbabilityError(ValidationError):
    """Conditioning on an event of probability zero."""

    code = "zero-probability"
