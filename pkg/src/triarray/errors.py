"""Exception types shared across the package.

Two broad families matter to callers. ``VerificationRejection`` subclasses
mean "the object you handed in fails the definition it was checked against"
and carry a witness; the CLI maps them to exit status 1. Everything else is
a usage or configuration problem (exit status 2).
"""

from __future__ import annotations


class GroupConstructionError(ValueError):
    """A multiplication table or generator set does not define a valid group."""


class MismatchedGroupError(ValueError):
    """Operands belong to different groups."""


class VerificationRejection(Exception):
    """Base class for definition checks that fail with a witness."""

    def __init__(self, message: str, *, condition: str = "", witness=None):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class NotADifferenceSetError(VerificationRejection):
    """Subset fails the constant-difference-count test (or is trivial/improper)."""

    def __init__(self, message: str, *, condition: str = "", witness=None,
                 element=None, count=None):
        super().__init__(message, condition=condition, witness=witness)
        self.element = element
        self.count = count


class DesignRejection(VerificationRejection):
    """Block collection fails one of the BIBD/SBIBD conditions."""


class MalformedArrayError(VerificationRejection):
    """Row-column array violates a structural requirement (repeats, blanks, size)."""


class BudgetExceededError(RuntimeError):
    """Search candidate count exceeds the configured cap."""

    def __init__(self, message: str, candidate_count: int):
        super().__init__(message)
        self.candidate_count = candidate_count


class ParameterMismatchError(ValueError):
    """Inputs carry parameters inconsistent with the requested operation."""


class UnsupportedUError(ValueError):
    """Requested family index u is not constructible from the built-in seeds."""

    def __init__(self, message: str, *, obstruction: str = ""):
        super().__init__(message)
        self.obstruction = obstruction


class UnsupportedOperationError(ValueError):
    """Operation undefined for this input (e.g. numerical multipliers of a non-abelian group)."""


class TheoremViolationError(RuntimeError):
    """An identity that must hold for verified inputs failed: an internal bug."""
