class InputError(ValueError):
    """Bad input: malformed data, ring mismatch, or a violated precondition."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
