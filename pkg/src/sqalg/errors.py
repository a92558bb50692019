"""Exception hierarchy shared by every module of the package."""


class SqAlgError(Exception):
    """Base class for all errors raised by sqalg."""


class RingMismatch(SqAlgError, ValueError):
    """Two operands live in different polynomial rings."""


class ParseError(SqAlgError, ValueError):
    """A textual polynomial, operation or series could not be parsed.

    ``pos`` is the 0-based character offset where parsing stopped.
    """

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        if text:
            message = f"{message} at position {pos}: {text[:pos]}<<HERE>>{text[pos:]}"
        super().__init__(message)


class UnknownGenerator(ParseError):
    pass


class NotDivisible(SqAlgError, ArithmeticError):
    pass


class NotHomogeneous(SqAlgError, ValueError):
    pass


class BoundExceeded(SqAlgError, RuntimeError):
    """A configured degree or operation bound would be exceeded."""


class PresentationError(SqAlgError, ValueError):
    """An algebra presentation or homomorphism fails validation."""
