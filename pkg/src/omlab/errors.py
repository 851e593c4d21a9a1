"""Exception types shared across the package."""

from __future__ import annotations


class OmlabError(Exception):
    """Base class for all domain errors raised by this package."""


class GroundTooLarge(OmlabError):
    """Ground set exceeds the 16-element enumeration bound."""


class GroundMismatch(OmlabError):
    """Two objects that must share a ground set do not."""


class LabelCollision(OmlabError):
    """A new element label is already present in the ground set."""


class AxiomViolation(OmlabError):
    """A circuit family fails one of the matroid / oriented-matroid axioms.

    ``axiom`` is one of ``M1 M2 M3 O1 O2 O3``; ``offenders`` holds the sets
    that witness the failure.
    """

    def __init__(self, axiom: str, message: str, offenders: tuple = ()):
        super().__init__(f"({axiom}) {message}")
        self.axiom = axiom
        self.offenders = offenders


class PartitionInvalid(OmlabError):
    """Blocks passed to a partition matroid overlap or miss elements."""


class AnchorInSet(OmlabError):
    """The anchor point coincides with one of the configuration points."""


class RankMismatch(OmlabError):
    """Instance ranks do not satisfy the relation required by the caller."""


class HypothesisUnmet(OmlabError):
    """A precondition that must hold before witness extraction fails."""

    def __init__(self, message: str, violators: tuple = ()):
        super().__init__(message)
        self.violators = violators


class NothingToReduce(OmlabError):
    """reduce_rank called on an instance already at the minimal rank gap."""


class WitnessNotTransversal(OmlabError):
    """A witness meets some color class more than once."""


class GenerationExhausted(OmlabError):
    """Rejection sampling hit its retry bound without a valid instance."""


class InternalInconsistency(OmlabError):
    """A structural property guaranteed by theory failed to hold; a bug."""


class ParseError(OmlabError):
    """Malformed instance text."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
