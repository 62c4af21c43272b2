"""Exception hierarchy shared by all hypercover modules."""


class HypercoverError(ValueError):
    """Base class for every error raised by this package."""


class InvalidSymbolError(HypercoverError):
    pass


class SingularMatrixError(HypercoverError):
    pass


class DomainError(HypercoverError):
    """A formula was evaluated outside the region where it is defined."""


class NotCompactError(DomainError):
    pass


class NonHyperbolicError(DomainError):
    pass


class UnsupportedSymbolError(HypercoverError):
    pass


class QuadratureError(HypercoverError):
    pass


class InvalidTilingError(HypercoverError):
    """Raised when a symbol is not one of the admissible prism tilings.

    The catalog reason tag is kept on ``reason``.
    """

    def __init__(self, symbol, reason):
        self.symbol = symbol
        self.reason = reason
        super().__init__(f"{symbol} is not a valid prism tiling ({reason})")
