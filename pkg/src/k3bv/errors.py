"""Exception types shared across the package."""


class K3BVError(ValueError):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(K3BVError):
    """Vector or matrix dimensions do not match the lattice rank."""


class NotInLattice(K3BVError):
    """A vector does not belong to the (sub)lattice it was claimed to."""


class AdmissibilityError(K3BVError):
    """An (E, E', m) triple fails one of the admissibility conditions."""


class SplittingError(K3BVError):
    """The orthogonal splitting T = P + M-check is not index one."""


class NormalizationError(K3BVError):
    """A required exact normalization identity fails."""


class CensusError(K3BVError):
    """A singular-fiber census violates one of its counting invariants."""
