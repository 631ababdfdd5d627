"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """Malformed input: wrong shape, out-of-range parameter, non-Hermitian matrix."""


class NotAStateError(ValueError):
    """Matrix is not a valid density matrix (materially negative eigenvalue)."""


class NumericError(ArithmeticError):
    """A numerical routine failed to converge or produced an impossible value."""
