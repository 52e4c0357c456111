"""Exception types shared across the package.

Plain division by zero raises the builtin ZeroDivisionError everywhere;
the classes below cover the structural failures that callers dispatch on
(the CLI maps them onto its exit-code contract).
"""


class Asq2Error(Exception):
    """Base class for all package-specific errors."""


class ZeroPolynomialError(Asq2Error):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


class DivisorBudgetExceeded(Asq2Error):
    """Divisor enumeration would produce more candidates than the configured cap."""


class IdentityEquationError(Asq2Error):
    """The degenerate quadratic 0*s^2 + 0*s + 0 = 0; every s solves it.

    Raised rather than answered: the solvers never legitimately produce it,
    so surfacing it catches coordinate bugs upstream.
    """


class UnsupportedFormShape(Asq2Error):
    """A quadratic form outside the supported monomial shapes."""


class NotDivisionError(Asq2Error):
    """A nonzero element of norm zero was hit: the algebra is split."""


class SplitAlgebraError(Asq2Error):
    """The algebra failed a division precheck at construction time."""


class NotSquareCentralError(Asq2Error):
    """Operand was required to be square-central and is not."""


class NotArtinSchreierError(Asq2Error):
    """Operand was required to be Artin-Schreier and is not."""


class CentralElementError(Asq2Error):
    """A supposedly non-central element commuted with every generator."""


class DegenerateBasisError(Asq2Error):
    """The adapted basis {1, e, f, fe} is linearly dependent."""


class BoxTooLargeError(Asq2Error):
    """Brute-force enumeration box beyond the cost guard."""


class InvariantViolation(Asq2Error):
    """An internal invariant failed (e.g. more than two finite roots)."""


class ElementSyntaxError(Asq2Error):
    """Malformed element text. Carries the offset of the offending token."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownSymbolError(ElementSyntaxError):
    """A symbol that does not exist in the current parsing context."""
