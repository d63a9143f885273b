"""Exception hierarchy.

Every error carries a short ``code`` string; the CLI reports it verbatim in
its machine-readable error object.
"""


class PolyAngleError(ValueError):
    code = "PolyAngleError"


class DimensionMismatchError(PolyAngleError):
    code = "DimensionMismatch"


class ZeroDivisorError(PolyAngleError, ZeroDivisionError):
    code = "ZeroDivisor"


class DomainError(PolyAngleError):
    code = "DomainViolation"


class NonPositiveComponentError(DomainError):
    code = "NonPositiveComponent"


class UnsupportedError(PolyAngleError):
    code = "Unsupported"


class IsotropicVectorError(PolyAngleError):
    code = "IsotropicVector"


class ZeroVectorError(PolyAngleError):
    code = "ZeroVector"


class SectorViolationError(DomainError):
    code = "SectorViolation"


class VanishingInvariantError(DomainError):
    code = "VanishingInvariant"


class SubmanifoldViolationError(PolyAngleError):
    code = "SubmanifoldViolation"


class PoleHitError(DomainError):
    code = "PoleHit"


class ZeroScaleError(PolyAngleError):
    code = "ZeroScale"


class DegenerateIntermediateError(PolyAngleError):
    code = "DegenerateIntermediate"


class NonRealRootsError(PolyAngleError):
    code = "NonRealRoots"


class DegenerateInvariantError(PolyAngleError):
    code = "DegenerateInvariant"


class UnknownEquationError(PolyAngleError, KeyError):
    code = "UnknownEquation"

    def __str__(self):
        # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""
