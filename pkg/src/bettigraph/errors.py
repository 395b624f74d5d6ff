"""Exception hierarchy shared by the library and the CLI."""


class BettiError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class RangeError(BettiError, ValueError):
    """A size guard was exceeded."""


class ValidationError(BettiError, ValueError):
    """Malformed input: non-increasing degree sequence, bad vertex, etc."""


class NotRealizable(BettiError):
    """The vector is not the reduced Betti vector of any 2-linear quotient."""


class NotChordal(BettiError):
    """A chordal graph was required."""


class NotInCone(BettiError):
    """The vector is not realizable by a module with the requested beta_00."""
