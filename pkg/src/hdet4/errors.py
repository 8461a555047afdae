"""Exception types shared across the package."""


class HDet4Error(Exception):
    """Base class for all package-specific errors."""


class UnknownState(HDet4Error):
    """Requested named state or family does not exist."""


class ArityMismatch(HDet4Error):
    """Wrong number of parameters for a state family."""


class NotHermitian(HDet4Error):
    """Matrix handed to the eigensolver is not Hermitian within tolerance."""


class NonUnitaryFactor(HDet4Error):
    """A single-qubit factor of a local unitary fails the unitarity check."""


class DegenerateJInvariant(HDet4Error):
    """J-invariant requested for a state whose hyperdeterminant is structurally zero."""


class OutOfOrderingRange(HDet4Error):
    """Analytic level ordering requested outside its validity window."""


class SingularAtZeroField(HDet4Error):
    """Closed-form eigenstate coefficients are singular at zero field."""


class InvalidCoupling(HDet4Error):
    """Spin quantum numbers do not form an allowed coupling."""


class NonOrthonormalBasis(HDet4Error):
    """Subspace minimizer requires an orthonormal basis."""


class BadRange(HDet4Error):
    """Invalid parameter grid or range request."""
