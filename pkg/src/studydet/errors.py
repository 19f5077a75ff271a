"""Exception types shared across the package."""


class StudyDetError(Exception):
    """Base class for all errors raised by studydet."""


class StructuralError(StudyDetError, ValueError):
    """Operands do not fit together (ring mismatch, bad shapes, non-subgroups)."""


class PreconditionError(StudyDetError, ValueError):
    """A hypothesis required by the requested computation does not hold."""


class BudgetError(PreconditionError):
    """Input exceeds the size budget for symbolic computation."""


class InputError(StudyDetError, ValueError):
    """Malformed input data (files, supplied representations, text)."""


class NotInvertibleError(StudyDetError, ArithmeticError):
    """Raised when an inverse is requested for a singular element or matrix."""
