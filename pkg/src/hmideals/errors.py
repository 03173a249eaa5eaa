"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Exponent vector length does not match the ambient variable count."""


class CutoffExceededError(ValueError):
    """A filtration query lies beyond the cutoff a spectrum guarantees."""


class HypothesisError(ValueError):
    """Combinatorial input violates the hypothesis a formula requires."""
