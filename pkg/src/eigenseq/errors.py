"""Exception types raised across the package."""


class EigenseqError(ValueError):
    """Base class for domain errors (CLI exit status 1)."""

    code = "domain-error"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class DimensionError(EigenseqError):
    code = "dimension-mismatch"


class NotUnitaryError(EigenseqError):
    code = "not-unitary"


class NotHermitianError(EigenseqError):
    code = "not-hermitian"


class NotNormalError(EigenseqError):
    code = "not-normal"


class ClusteringError(EigenseqError):
    code = "ill-conditioned-clustering"


class OrderingError(EigenseqError):
    code = "ordering-tie"


class DegenerateInitialError(EigenseqError):
    code = "degenerate-initial-matrix"


class InputError(EigenseqError):
    """Malformed input (CLI exit status 2)."""

    code = "malformed-input"
