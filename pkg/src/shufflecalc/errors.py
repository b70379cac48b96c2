"""Exceptions shared across the package."""


class DegreeGuardError(ValueError):
    """Raised when an operation is asked to work above its degree guard."""


class NotSymmetricError(ValueError):
    """A quasisymmetric function failed the symmetry test during conversion."""


class UnsupportedConversionError(ValueError):
    """Basis conversion outside the supported graph (e.g. general p_lambda)."""


class SizeMismatchError(ValueError):
    """Inputs whose sizes must agree (|lambda| = |mu|, |alpha| = n+k) do not."""


class PeriodicWordError(ValueError):
    """A cyclic word with rotational symmetry cannot encode a bi-brick cycle."""


class InhomogeneousInputError(ValueError):
    """An operation requiring a homogeneous symmetric function got mixed degrees."""


class SingularSystemError(RuntimeError):
    """The Macdonald change-of-basis data failed its exact verification."""
