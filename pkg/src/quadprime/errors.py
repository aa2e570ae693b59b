class CapacityError(Exception):
    """Requested table exceeds the configured memory/size budget."""


class RangeError(ValueError):
    """Query argument outside the table or the supported integer range."""


class ParameterError(ValueError):
    """Invalid parameter value (bad modulus, exponent, tolerance, ...)."""
