class KmkError(Exception):
    exit_code: int = 1


class ConfigError(KmkError, ValueError):
    exit_code = 2


class UnsupportedTypeError(KmkError, ValueError):
    exit_code = 3


class ResourceGuardError(KmkError):
    exit_code = 4


class NotGcmError(UnsupportedTypeError):
    ...


class NotSymmetrizableError(UnsupportedTypeError):
    ...


class NotInTitsConeError(KmkError, ValueError):
    ...


class InfiniteStabilizerError(KmkError, ValueError):
    ...


class HeightBoundExceededError(KmkError, ValueError):
    ...


class NotDominantError(KmkError, ValueError):
    ...


class NotRegularDominantError(NotDominantError):
    ...


class NotInvertibleError(KmkError, ArithmeticError):
    ...


class AnchorNotLatticeCompatibleError(KmkError, ValueError):
    ...


class ZeroDenominatorError(KmkError, ArithmeticError):
    ...


class PreconditionViolatedError(KmkError, ValueError):
    ...


class BallTooLargeError(ResourceGuardError):
    ...
