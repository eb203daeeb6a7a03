class QmcError(Exception):
    """Root of every error raised by the toolkit."""


# Usage and precondition violations, reported with exit code 2

class InvalidPartitionError(QmcError, ValueError):
    pass


class InvalidHeightError(QmcError, ValueError):
    pass


class WeightMismatchError(QmcError, ValueError):
    pass


class ParameterError(QmcError, ValueError):
    pass


class CapExceededError(QmcError, ValueError):
    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f'"{what}" is {value}, which exceeds the configured cap of {cap}.')
        self.what = what
        self.value = value
        self.cap = cap


class GraphFormatError(QmcError, ValueError):
    pass


class SdpaFormatError(QmcError, ValueError):
    pass


class UnprovedRegimeError(QmcError, ValueError):
    pass


# Numerical failures, reported with exit code 3

class NumericalFailure(QmcError, ArithmeticError):
    pass


class ConvergenceError(NumericalFailure):
    def __init__(self, message: str, residual: float = float('nan')):
        super().__init__(f'{message} (residual {residual:.3e})')
        self.residual = residual


class InternalConsistencyError(NumericalFailure):
    pass


class StraighteningError(NumericalFailure):
    pass


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, NumericalFailure):
        return 3

    if isinstance(error, (ValueError, OSError)):
        return 2

    return 3
