"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` so the CLI can emit
it verbatim; the codes match the operation contracts.
"""


class HenselianError(Exception):
    """Base class for all contract violations raised by this package."""

    code = "Error"

    def __init__(self, message=""):
        super().__init__(message or self.code)


def _make(name, doc=""):
    cls = type(name, (HenselianError,), {"code": name, "__doc__": doc})
    return cls


MixedRings = _make("MixedRings")
NotLocal = _make("NotLocal")
NotResiduallyDiscrete = _make("NotResiduallyDiscrete")
UnsupportedKind = _make("UnsupportedKind")
NotMonic = _make("NotMonic")
NotResiduallyCoprime = _make("NotResiduallyCoprime")
NotFiniteField = _make("NotFiniteField")
NotIdempotent = _make("NotIdempotent")
NotAlmostIdempotent = _make("NotAlmostIdempotent")
NotIdempotentMatrix = _make("NotIdempotentMatrix")
NotInvertible = _make("NotInvertible")
NotAFactorization = _make("NotAFactorization")
NotAFactorizationResidually = _make("NotAFactorizationResidually")
DegreeCapExceeded = _make("DegreeCapExceeded")
MixedAlgebras = _make("MixedAlgebras")
NotInvariant = _make("NotInvariant")
NotInBaseImage = _make("NotInBaseImage")
ZeroIdempotent = _make("ZeroIdempotent")
PreconditionViolated = _make("PreconditionViolated")
NotARoot = _make("NotARoot")
NotSimple = _make("NotSimple")
NotGaloisResidually = _make("NotGaloisResidually")
NotIdempotentResidually = _make("NotIdempotentResidually")
InternalDescentFailure = _make("InternalDescentFailure")
NoCompatibleRoot = _make("NoCompatibleRoot")
NotResiduallyIrreducible = _make("NotResiduallyIrreducible")
UnsupportedBase = _make("UnsupportedBase")
