"""Exception types raised across the package.

Every error that callers are expected to branch on derives from
:class:`SymstabError`; the CLI maps them onto exit codes (invalid input
vs. exceeded budget vs. failed verification).
"""


class SymstabError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(SymstabError):
    """Malformed or inconsistent input data (CLI exit code 2)."""


class NonPrimeError(InvalidInputError):
    """Field characteristic is not a prime number."""


class MissingModulusError(InvalidInputError):
    """Extension field requested without a modulus polynomial."""


class ReducibleModulusError(InvalidInputError):
    """Modulus polynomial is not irreducible (or not monic of degree r)."""


class LengthMismatchError(InvalidInputError):
    """Vectors of different lengths (or over different fields) were combined."""


class NotSymmetricError(InvalidInputError):
    """Matrix expected to be symmetric is not."""


class OddDiagonalError(InvalidInputError):
    """Characteristic-two matrix has a nonzero diagonal entry, so it cannot
    be written as D + D^T."""


class DimensionTooSmallError(InvalidInputError):
    """Ambient dimension below the minimum the construction needs."""


class PhaseSplitError(InvalidInputError):
    """Supplied (L, D) do not satisfy L = D + D^T."""


class NotIsotropicError(InvalidInputError):
    """Generator pairs are not pairwise symplectically orthogonal."""


class DependentGeneratorsError(InvalidInputError):
    """Generator pairs are linearly dependent."""


class InconsistentPhasesError(InvalidInputError):
    """No phase assignment makes the generated operator set an abelian group
    free of scalar multiples of the identity."""


class NotPureError(SymstabError):
    """Operation requires a pure code but the input is not pure."""


class DistanceTooSmallError(SymstabError):
    """Operation requires minimum distance at least 2."""


class IsotropyLostError(SymstabError):
    """Internal consistency failure: a derived stabilizer stopped being
    isotropic.  Always a bug or corrupted input, never ignored."""


class BudgetExceededError(SymstabError):
    """Enumeration would visit more elements than the configured budget
    (CLI exit code 3)."""


class DimensionLimitError(SymstabError):
    """Dense state-space dimension q^n exceeds the configured limit."""


class DomainError(InvalidInputError):
    """Numeric argument outside its mathematical domain."""
