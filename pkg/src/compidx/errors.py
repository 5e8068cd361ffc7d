"""Exception hierarchy for compidx."""


class CompidxError(Exception):
    """Base class for all errors raised by this package."""


class DigraphValidationError(CompidxError, ValueError):
    pass


class LoopArcError(DigraphValidationError):
    pass


class DigonArcError(DigraphValidationError):
    pass


class IntraPartArcError(DigraphValidationError):
    pass


class MissingCrossArcError(DigraphValidationError):
    pass


class NotMultipartiteError(DigraphValidationError):
    pass


class DimensionMismatchError(CompidxError, ValueError):
    pass


class ExponentOverflowError(CompidxError, RuntimeError):
    """Power iteration passed the Wielandt bound on a digraph reported primitive."""


class NotInUError(CompidxError, ValueError):
    pass


class NoDirectedCycleError(CompidxError, ValueError):
    pass


class TheoremViolation(CompidxError):
    """A structural statement that should hold for every input was falsified."""


class NotTournamentError(CompidxError, ValueError):
    pass


class NotCoprimeError(CompidxError, ValueError):
    pass


class InvalidZetaError(CompidxError, ValueError):
    pass


class ConsecutiveSamePartError(CompidxError, ValueError):
    pass


class ExhaustedTriesError(CompidxError, RuntimeError):
    pass


class TooLargeError(CompidxError, ValueError):
    pass


class FormatError(CompidxError, ValueError):
    """Malformed digraph text file."""
