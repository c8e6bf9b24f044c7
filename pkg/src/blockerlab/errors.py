"""Exception types shared across the package."""


class BlockerlabError(Exception):
    """Base class for all package-specific errors."""


class InvalidEdgeError(BlockerlabError):
    """An edge set refers to a pair that is not an edge of the host graph."""


class InvalidVertexError(BlockerlabError):
    """A vertex set refers to an index outside the host graph."""


class GraphFormatError(BlockerlabError):
    """A text instance file could not be parsed."""


class NotACographError(BlockerlabError):
    """Raised when a cotree is requested for a graph with an induced P4.

    The offending four vertices are stored in ``witness``.
    """

    def __init__(self, witness):
        super().__init__(f"graph is not a cograph, induced P4 on {sorted(witness)}")
        self.witness = tuple(witness)


class CertificateError(BlockerlabError):
    """A class certificate does not validate against its graph."""


class CriticalityError(BlockerlabError):
    """A set handed to a solution-transfer routine is not criticality-certified."""


class GadgetPreconditionError(BlockerlabError):
    """An instance violates a gadget builder's precondition."""


class CapacityExceededError(BlockerlabError):
    """An exhaustive routine would exceed its configured work budget.

    This is a first-class outcome: oracles refuse rather than degrade silently.
    """

    def __init__(self, message, needed=None, budget=None):
        super().__init__(message)
        self.needed = needed
        self.budget = budget
