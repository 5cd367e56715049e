"""Exception types shared across the toolkit.

Every error that carries forensic data exposes it on ``.witness`` so CLI
reports can serialize it without string-parsing messages.
"""


class CubetoolError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# complex_core
class MalformedComplex(CubetoolError):
    pass


class UnknownVertex(CubetoolError):
    pass


class DimensionCapExceeded(CubetoolError):
    pass


class MalformedMap(CubetoolError):
    pass


class NotDimensionPreserving(CubetoolError):
    pass


# hyperplanes
class RequiresTwoSided(CubetoolError):
    pass


class OneSidedWall(CubetoolError):
    pass


# cat0_geometry
class NotNPC(CubetoolError):
    pass


class Disconnected(CubetoolError):
    pass


class NotConvex(CubetoolError):
    pass


class AmbiguousGate(CubetoolError):
    """Internal bug signal: the nearest-point projection must be unique."""


class EmptyRegion(CubetoolError):
    pass


class DevelopmentError(CubetoolError):
    """Inconsistency while developing a cover; indicates non-NPC input or a bug."""


# completion
class PreconditionFailed(CubetoolError):
    pass


class CoveringCheckFailed(CubetoolError):
    pass


class NotCovering(CubetoolError):
    pass


class ConditionFailed(CubetoolError):
    """A functoriality hypothesis (i)-(iv) fails; .condition names which."""

    def __init__(self, condition, message, witness=None):
        super().__init__(message, witness)
        self.condition = condition


class DiagramFailed(CubetoolError):
    pass


# wallgraph
class UnknownWall(CubetoolError):
    pass


class ConditionViolated(CubetoolError):
    """Region/coloring condition (1) or (2) fails; .condition is 1 or 2."""

    def __init__(self, condition, message, witness=None):
        super().__init__(message, witness)
        self.condition = condition


# cusped
class OracleInconsistent(CubetoolError):
    pass


class BallBudgetExceeded(CubetoolError):
    pass


class UnknownCoset(CubetoolError):
    pass


# gog / ledger
class NotSpanningTree(CubetoolError):
    pass


class NotACircuit(CubetoolError):
    def __init__(self, message, index=None, witness=None):
        super().__init__(message, witness)
        self.index = index


class BudgetExceeded(CubetoolError):
    pass


class UnknownClass(CubetoolError):
    pass


class Unbalanced(CubetoolError):
    pass


class MalformedLedger(CubetoolError):
    pass


# cli
class UnknownCorpusItem(CubetoolError):
    pass


class UsageError(CubetoolError):
    pass
