"""Exception types raised across the package."""


class KddaSvmError(ValueError):
    """Base class for all library errors."""


class InvalidMatrix(KddaSvmError):
    pass


class InvalidInput(KddaSvmError):
    pass


class InvalidConfig(KddaSvmError):
    pass


class UnsupportedKernel(KddaSvmError):
    pass
