"""Exception types shared across the package.

Four failure classes are distinguished: bad caller input, inputs exceeding a
configured exhaustive-search threshold, violations of internal invariants that
are supposed to be impossible (these indicate a bug, never bad input), and
searches that legitimately have no answer.
"""


class InputError(ValueError):
    """The caller passed something malformed (bad vertex, invalid certificate, ...)."""


class CapacityError(RuntimeError):
    """The instance exceeds a threshold of an exhaustive strategy; message names it."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class NoSolutionError(RuntimeError):
    """A search that is allowed to fail (no path, target not dominable) found nothing."""
