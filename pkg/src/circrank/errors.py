"""Exception types shared across the package."""


class CircrankError(Exception):
    """Base class for all errors raised by this package."""


class MixedFieldError(CircrankError):
    """Operands belong to different field contexts."""


class NoEmbeddingError(CircrankError):
    """No coefficient embedding exists between the two field contexts."""


class CharDividesNError(CircrankError):
    """The field characteristic divides a block length, so no primitive
    root of unity of that order exists in any extension."""


class BothZeroError(CircrankError):
    """gcd of two zero polynomials is undefined."""


class ZeroOperandError(CircrankError):
    """lcm requires nonzero operands."""


class OrderMismatchError(CircrankError):
    """Element does not have the required multiplicative order."""


class NotSquareError(CircrankError):
    """Operation requires a square double circulant (m = n + n')."""


class ZeroGeneratorError(CircrankError):
    """Code construction requires at least one nonzero generator polynomial."""


class OddLengthError(CircrankError):
    """Index-1½ quasi-cyclic constructions need an even block length."""


class SpecError(CircrankError):
    """Invalid matrix/code specification (bad sizes, coprimality, degrees)."""


class InternalCheckError(CircrankError):
    """A mathematical consistency check failed; indicates a library bug."""
