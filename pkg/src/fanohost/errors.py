class InvariantViolation(RuntimeError):
    """Two independent computations disagreed; always a bug, never bad input."""


class UnsupportedConstruction(ValueError):
    """The requested host construction does not apply to this visitor."""
