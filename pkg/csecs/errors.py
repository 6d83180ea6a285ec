"""
Error types raised by the library and mapped to CLI exit codes.
"""


class CsEcsError(Exception):
    """
    Base class for every error the package raises on purpose.
    """
    exit_code = 1

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        return {
            'error': type(self).__name__,
            'message': self.message,
            'details': {key: repr(value) for key, value in self.details.items()}
        }


class InvalidParams(CsEcsError):
    exit_code = 2


class InvalidSpec(CsEcsError):
    exit_code = 2


class UnsupportedOrder(CsEcsError):
    """
    A closed form was asked for operation orders it does not cover.
    """
    exit_code = 2


class VerificationFailed(CsEcsError):
    exit_code = 3


class NumericError(CsEcsError):
    exit_code = 4


class DegenerateState(NumericError):
    """
    The requested state vanishes (zero norm) or a ratio has a zero denominator.
    """


class TruncationError(NumericError):
    pass


class HeadroomError(NumericError):
    pass


class ConvergenceError(NumericError):
    pass
