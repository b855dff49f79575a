"""Exception types shared across the package.

Every contract violation raises a subclass of QCStabError so callers can
catch the whole family; the CLI maps them onto exit code 2.
"""


class QCStabError(Exception):
    """Base class for all qcstab errors."""


class NotPrimeError(QCStabError):
    """Field characteristic is not a prime number."""


class DegreeZeroError(QCStabError):
    """Extension degree must be at least 1."""


class FieldTooLargeError(QCStabError):
    """Field exceeds the supported size budget."""


class MixedFieldsError(QCStabError):
    """Operands belong to different fields."""


class InverseOfZeroError(QCStabError, ZeroDivisionError):
    """Multiplicative inverse of the zero element."""


class NotASubfieldError(QCStabError):
    """Source field does not embed into the target field."""


class NotInSubfieldError(QCStabError):
    """Element does not lie in the image of the subfield."""


class NotCoprimeError(QCStabError):
    """gcd(n, q) != 1: x^n - 1 would not be square-free."""


class DivideByZeroError(QCStabError, ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class BothZeroError(QCStabError):
    """gcd/lcm of two zero polynomials."""


class NotADivisorError(QCStabError):
    """Polynomial does not divide x^n - 1 (or the stated modulus)."""


class NotMonicError(QCStabError):
    """Polynomial must be monic."""


class DegreeTooLargeError(QCStabError):
    """Polynomial degree exceeds the residue-ring bound."""


class MixedModulusError(QCStabError):
    """Residues live in rings with different n."""


class IncompleteCosetError(QCStabError):
    """Exponent set is not a union of full cyclotomic cosets."""


class BudgetExceededError(QCStabError):
    """Requested exact enumeration exceeds the codeword budget."""


class WrongFieldForHermitianError(QCStabError):
    """Hermitian duality needs a field of square order GF(q^2)."""


class LengthMismatchError(QCStabError):
    """Vector lengths incompatible with the requested inner product."""


class OddLengthError(QCStabError):
    """Symplectic weight needs an even-length vector."""


class InadmissibleHError(QCStabError):
    """h fails gcd(h - beta, x^n - 1) = 1 for some nonzero beta."""


class NotOfRequiredFormError(QCStabError):
    """Shortcut test preconditions (e.g. n = p^m - 1) not met."""


class PreconditionViolatedError(QCStabError):
    """Trace-polynomial parameters violate s < p, s | m, gcd(s, r) = 1."""


class NotSelfOrthogonalError(QCStabError):
    """Code is not self-orthogonal under the requested form."""


class NotNestedError(QCStabError):
    """CSS construction requires C2 contained in C1."""


class ZeroLogicalError(QCStabError):
    """CSS construction degenerates to k = 0."""
