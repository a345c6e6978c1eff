"""Exception types shared across the workbench.

The CLI maps these to exit codes: InvalidInput/InvalidField/LooplessRequired
to 2, TooLarge to 3, InternalInvariantViolation to 4.
"""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class InvalidInput(WorkbenchError):
    """Malformed descriptor, subset outside the ground set, bad arguments."""


class InvalidField(WorkbenchError):
    """Unrecognized field name or non-prime modulus."""


class TooLarge(WorkbenchError):
    """A computation exceeds its configured enumeration or point budget."""


class LooplessRequired(WorkbenchError):
    """Raised by constructions that are only defined for loopless matroids."""


class InternalInvariantViolation(WorkbenchError):
    """Two internally computed values that must agree do not.

    This always indicates a bug in the workbench, never bad input.
    """
