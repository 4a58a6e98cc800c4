"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    """Operands live in different ambient spaces or over different fields."""


class CoverageImpossible(ValueError):
    """A subspace to be avoided contains the whole search space."""


class FieldTooSmall(ValueError):
    """The finite field is too small for a vector avoiding every subspace to exist."""


class NotComparable(ValueError):
    """Two cycles cross, so they have no height order."""


class NotTransverse(ValueError):
    pass


class InstanceTooLarge(ValueError):
    pass


class ReductionError(ValueError):
    """Entrywise reduction to a prime field failed."""


class InternalInconsistency(RuntimeError):
    """A guaranteed invariant failed; this indicates a bug, not bad input."""


class CertificateError(AssertionError):
    """A cost bound that should hold by the lattice-path argument was violated."""
