class Error(Exception):
    """Base class for custom exceptions in skewtools."""

    pass


class DivisionByZero(Error):
    """Exception raised when dividing by the zero field element."""

    def __init__(self, message):
        self.message = message


class MismatchedField(Error):
    """Exception raised when operands live in different fields."""

    def __init__(self, message):
        self.message = message


class ZeroInput(Error):
    """Exception raised when an operation needs a nonzero field element."""

    def __init__(self, message):
        self.message = message


class NotAUnit(Error):
    """Exception raised when a chain-ring element is not invertible."""

    def __init__(self, message):
        self.message = message


class MismatchedRing(Error):
    """Exception raised when operands live in different chain rings."""

    def __init__(self, message):
        self.message = message


class CapExceeded(Error):
    """Exception raised when an enumeration would exceed its configured cap."""

    def __init__(self, message):
        self.message = message


class KTooSmall(Error):
    """Exception raised when projecting R_1 to R_0."""

    def __init__(self, message):
        self.message = message


class MismatchedContext(Error):
    """Exception raised when skew polynomials come from different skew rings."""

    def __init__(self, message):
        self.message = message


class NonUnitLeadingCoeff(Error):
    """Exception raised when dividing by a polynomial whose leading coefficient is
    not a unit."""

    def __init__(self, message):
        self.message = message


class NonUnitPivot(Error):
    """Exception raised when the Euclidean algorithm over R_k meets a non-unit
    leading coefficient."""

    def __init__(self, message):
        self.message = message


class NonMonic(Error):
    """Exception raised when a monic polynomial is required."""

    def __init__(self, message):
        self.message = message


class ZeroPolynomial(Error):
    """Exception raised when an operation is undefined on the zero polynomial."""

    def __init__(self, message):
        self.message = message


class FieldTooLarge(Error):
    """Exception raised when a field scan would exceed its cap."""

    def __init__(self, message):
        self.message = message


class PreconditionViolated(Error):
    """Exception raised when a factorization hypothesis does not hold."""

    def __init__(self, message):
        self.message = message


class NoPsRoot(Error):
    """Exception raised when lambda has no p^s-th root in R_k."""

    def __init__(self, message):
        self.message = message


class CharacteristicThree(Error):
    """Exception raised when cube roots are lifted in characteristic 3."""

    def __init__(self, message):
        self.message = message


class NotCoprime(Error):
    """Exception raised when central factors fail to be coprime."""

    def __init__(self, message):
        self.message = message


class ArityMismatch(Error):
    """Exception raised when the number of CRT components is wrong."""

    def __init__(self, message):
        self.message = message


class LengthMismatch(Error):
    """Exception raised when a vector does not match the code length."""

    def __init__(self, message):
        self.message = message


class NotReduced(Error):
    """Exception raised when a generator is not reduced modulo the ambient modulus."""

    def __init__(self, message):
        self.message = message


class UnsupportedAmbient(Error):
    """Exception raised when an ambient quotient is outside an operation's scope."""

    def __init__(self, message):
        self.message = message


class IndexOutOfRange(Error):
    """Exception raised when a torsion index lies outside 1..k."""

    def __init__(self, message):
        self.message = message


class NotDeskScale(Error):
    """Exception raised when a brute-force routine is asked for too large a case."""

    def __init__(self, message):
        self.message = message


class AutomorphismMovesAlpha(Error):
    """Exception raised when the substitution scalar is not fixed by the
    automorphism."""

    def __init__(self, message):
        self.message = message


class AmbientMismatch(Error):
    """Exception raised when a code and a CRT system use different moduli."""

    def __init__(self, message):
        self.message = message


class ZeroCode(Error):
    """Exception raised when the minimum distance of the zero code is requested."""

    def __init__(self, message):
        self.message = message


class Infeasible(Error):
    """Exception raised when no distance strategy fits within its caps."""

    def __init__(self, message):
        self.message = message


class NotFieldCode(Error):
    """Exception raised when a field-only operation receives a chain-ring code."""

    def __init__(self, message):
        self.message = message


class CertificateFailed(Error):
    """Exception raised when a computed result fails its own verification."""

    def __init__(self, message):
        self.message = message


class ModulusUnavailable(Error):
    """Exception raised when no Conway polynomial is known for a field."""

    def __init__(self, message):
        self.message = message


class SpecParse(Error):
    """Exception raised when a spec string or polynomial text cannot be parsed.

    Args:
        message (str): What went wrong.
        text (str): The offending input.
        position (int): Zero-based index into ``text`` where parsing failed.
    """

    def __init__(self, message, text='', position=0):
        self.message = message
        self.text = text
        self.position = position

    def __str__(self):
        if not self.text:
            return self.message
        pointer = ' ' * self.position + '^'
        return f'{self.message} at position {self.position}\n  {self.text}\n  {pointer}'
