"""Exception hierarchy shared by every module of the package."""


class CorrHomError(Exception):
    """Base class for all errors raised by corrhom."""


class ParseError(CorrHomError, ValueError):
    """Input text is not well-formed (bad JSON, missing keys, wrong types)."""


class ValidationError(CorrHomError, ValueError):
    """Input is well-formed but violates a structural invariant."""


class DomainMismatch(CorrHomError, ValueError):
    """Two permutations were combined over different domains."""


class ShapeMismatch(CorrHomError):
    """An engine or transform was applied to a target it does not handle."""


class NonAffineList(ShapeMismatch):
    """A list (or filtered domain) cannot be written as GF(2) equations."""


class NotApplicable(CorrHomError):
    """A transform's precondition does not hold for the given input."""


class TargetMismatch(CorrHomError, ValueError):
    """The instance's target is not the graph the transform expects."""


class RetriesExhausted(CorrHomError, RuntimeError):
    """Randomised construction could not be verified within its retry budget."""


class InternalError(CorrHomError, AssertionError):
    """A self-check failed; indicates a bug, never bad input."""
