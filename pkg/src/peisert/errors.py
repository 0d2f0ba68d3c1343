"""Exception types shared across the package.

Errors fall into three groups, which the command line maps to exit codes:
bad input (the request itself is malformed), exhausted budgets, and failed
verifications (the input was well formed but a certified property did not
hold).
"""


class PeisertError(Exception):
    """Base class for all library errors."""


# ----- bad input -------------------------------------------------------

class NonPrimeCharacteristic(PeisertError):
    """The characteristic must be an odd prime."""


class ReducibleModulus(PeisertError):
    """The supplied modulus polynomial is not irreducible (or not monic)."""


class OverflowingOrder(PeisertError):
    """Field order above the 2**20 table cap."""


class LogOfZero(PeisertError):
    """Discrete log of the zero element requested."""


class OddDegreeField(PeisertError):
    """A quadratic-extension operation was applied to an odd-degree field."""


class NotProperSubfield(PeisertError):
    """Requested subfield order does not give a proper subfield of F_q."""


class MissingBaseCoset(PeisertError):
    """Connection sets must contain coset index 0 (the subfield line)."""


class TooManyCosets(PeisertError):
    """More than q coset indices requested."""


class IndexOutOfRange(PeisertError):
    """Coset index outside [0, q]."""


class BadDivisor(PeisertError):
    """Family parameter d fails its divisibility requirement."""


class WrongCharacteristicResidue(PeisertError):
    """Residue condition on q for the requested family fails."""


class AlphaInSubfield(PeisertError):
    """The chosen plane coordinate alpha lies in F_q."""


class NoFreeCoset(PeisertError):
    """No coset left over for alpha; impossible when m <= q."""


class NoUnusedSlope(PeisertError):
    """All q + 1 slopes are used, so no slope row yields a coloring."""


class LengthMismatch(PeisertError):
    """A vector or coloring has the wrong length."""


class NotHoffmanTight(PeisertError):
    """Clique size differs from 1 + k/m, so regularity is undefined."""


class NotMaximumClique(PeisertError):
    """The supplied vertex set is not a maximum clique."""


class NotSquare(PeisertError):
    """A square matrix was required."""


class BadEntries(PeisertError):
    """Matrix entries outside {-1, 0, 1}."""


class ZeroVector(PeisertError):
    """Eigenfunction checks reject the all-zero vector."""


# ----- exhausted budget -------------------------------------------------

class SearchTimeout(PeisertError):
    """A search exceeded its time budget; partial output is never returned."""


# ----- failed verification ----------------------------------------------

class VerificationFailed(PeisertError):
    """An element-by-element check of a constructed set failed."""


class NotRegular(PeisertError):
    """Graph is not regular; witness vertex pair attached."""


class NotStronglyRegular(PeisertError):
    """Common-neighbor counts are not constant; witness pair attached."""


class OAVerificationFailed(PeisertError):
    """Some pair of rows misses or repeats an ordered symbol pair."""


class NotIsomorphicUnderF(PeisertError):
    """The planar correspondence is not an isomorphism; witness attached."""


class CorrespondenceFailed(PeisertError):
    """A line clique and its coset clique disagree under the correspondence."""


class RankDeficient(PeisertError):
    """A matrix expected to have full rank does not."""


class NonZeroResidual(PeisertError):
    """An exact linear solve left a nonzero residual."""


class CanonicalAfterAll(PeisertError):
    """A clique constructed to be non-canonical matched a coset clique."""


class CertificationFailed(PeisertError):
    """A multi-part certificate failed at the attached stage."""


class ReproductionMismatch(PeisertError):
    """A pinned reproduction value disagreed with the recomputation."""
