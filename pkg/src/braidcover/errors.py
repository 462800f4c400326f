"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line front end can map
failures onto its documented exit statuses without a lookup table:
2 for bad input, 3 for a violated hypothesis guard, 4 for internal bugs.
"""


class BraidCoverError(Exception):
    exit_code = 4

    def to_dict(self):
        return {"error": type(self).__name__, "message": str(self)}


class InputError(BraidCoverError, ValueError):
    exit_code = 2


class BraidSyntaxError(InputError):
    """Malformed token in braid notation."""


class IndexOutOfRange(InputError):
    """Generator index outside 1..n-1."""


class StrandMismatch(InputError):
    pass


class DegenerateStrands(InputError):
    """Operation needs at least two strands."""


class BadDegree(InputError):
    pass


class NotConnected(InputError):
    """Monodromy representation is not transitive."""


class SchemaError(InputError):
    pass


class GuardError(BraidCoverError):
    """A hypothesis of the covering formula fails."""

    exit_code = 3
    guard = ""

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        d = super().to_dict()
        d["guard"] = self.guard
        d.update(self.details)
        return d


class NotFullyRamified(GuardError):
    guard = "fully-ramified"


class AnnulusException(GuardError):
    guard = "annulus-exception"


class InternalError(BraidCoverError):
    exit_code = 4


class BudgetExceeded(InternalError):
    """Handle reduction ran out of steps; reduction always terminates, so this is a bug."""


class EmptyIntersection(InternalError):
    pass


class InvariantViolation(InternalError):
    pass


class BoundTooSmall(BraidCoverError):
    """Oracle scan window does not contain the floor."""
