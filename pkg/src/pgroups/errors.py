"""Error taxonomy shared by every layer of the package.

All failures raised on purpose derive from PGroupsError so callers can
distinguish domain errors from genuine bugs.  Budget refusals carry the
budget that was hit; nothing in the package ever silently samples or
truncates instead of raising.
"""

from __future__ import annotations


class PGroupsError(Exception):
    """Base class for every deliberate failure mode."""


class CapExceeded(PGroupsError):
    """Element enumeration passed the configured cap."""

    def __init__(self, cap: int, message: str = ""):
        self.cap = cap
        super().__init__(message or f"element cap {cap} exceeded")


class SubgroupCapExceeded(PGroupsError):
    """Subgroup or lattice enumeration passed the configured cap."""

    def __init__(self, cap: int, message: str = ""):
        self.cap = cap
        super().__init__(message or f"subgroup cap {cap} exceeded")


class ScanBudgetExceeded(PGroupsError):
    """An exhaustive scan would exceed its declared budget."""

    def __init__(self, budget: int, message: str = ""):
        self.budget = budget
        super().__init__(message or f"scan budget {budget} exceeded")


class NotPGroup(PGroupsError):
    """The enumerated group order is not a power of the claimed prime."""


class MixedRealization(PGroupsError):
    """Elements from incompatible realizations were combined."""


class WrongRealization(PGroupsError):
    """The operation needs a different realization kind."""


class NotNormal(PGroupsError):
    """A quotient or series step was asked for a non-normal subgroup."""


class OddPrimeRequired(PGroupsError):
    """The operation is only defined for odd p."""


class NotCoprime(PGroupsError):
    """p divides q where coprimality is required."""


class NotApplicable(PGroupsError):
    """Preconditions of a check fail in a way that makes it vacuous."""


class NotHomomorphism(PGroupsError):
    """Candidate generator matrices do not define a homomorphism."""


class NotInvertible(PGroupsError):
    """A matrix that must be invertible is singular."""


class DimensionMismatch(PGroupsError):
    """Matrix or module dimensions do not line up."""


class NotWreathGroup(PGroupsError):
    """The group does not carry wreath block structure."""


class NotInBase(PGroupsError):
    """The subgroup is not contained in the wreath base."""


class NoDeepest(PGroupsError):
    """A central element has no deepest commutator."""


class SpecSyntaxError(PGroupsError):
    """Group spec string failed to parse; carries the offending position."""

    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"at position {position}: {message}")


class InconsistencyError(PGroupsError):
    """Two routes that must agree disagreed: release blocker."""
