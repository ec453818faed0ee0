"""Domain-specific exceptions shared across modules."""


class ShapeError(ValueError):
    """Matrix shapes incompatible with the requested operation."""


class IrrationalSpectrum(ValueError):
    """Characteristic polynomial does not split over the rationals."""


class NotAntiCommuting(ValueError):
    """Pair (A, B) fails AB + BA = 0."""


class NotGeneric(ValueError):
    """Pair fails the genericity conditions for its component triple."""


class NotInCommutant(ValueError):
    """Matrix is not a solution of the required (anti-)commutation equation."""


class RetriesExhausted(RuntimeError):
    """Rejection sampling hit the retry cap without an admissible draw."""
