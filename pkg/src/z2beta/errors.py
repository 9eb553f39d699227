"""Exception hierarchy for the toolkit.

Every error raised on purpose derives from ToolkitError, so callers (and the
command line front end) can separate bad input from genuine bugs.
"""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------------------
# exact algebra

class DivisionByZero(ToolkitError, ZeroDivisionError):
    """Division by the zero rational function."""


class NonIntegerExpansion(ToolkitError):
    """A Laurent coefficient failed to be an integer.

    Cannot happen for values in the image of the equivariant series; it
    signals corrupted input (a denominator that is not monic after
    normalization).
    """


class PoleAtPoint(ToolkitError):
    """Evaluation of a rational function at a root of its denominator."""


# ---------------------------------------------------------------------------
# G-CW homology

class InvalidComplex(ToolkitError):
    """The cellular data violates an invariant; the message lists them."""


class TailNotStabilized(ToolkitError):
    """The negative part of a homology table did not settle in the window."""


class FixedSetNotSubcomplex(ToolkitError):
    """The involution-fixed cells are not closed under the boundary map."""


# ---------------------------------------------------------------------------
# calculus of virtual classes

class NormalFormError(ToolkitError):
    """A value does not decompose as polynomial + tail * u/(u-1)."""


class InvalidAtom(ToolkitError):
    """Atom parameters out of range, or a custom atom out of normal form."""


class NegativeCoefficient(ToolkitError):
    """Lift of a polynomial with negative coefficients without the override."""


class NotFree(ToolkitError):
    """Quotient requested for a class whose fixed tail is nonzero."""


class AssertionMissing(ToolkitError):
    """A caller-side geometric assertion (freeness, fixed set) was not given."""


class MissingDimHint(ToolkitError):
    """Degree check requested on a class without a dimension hint."""


# ---------------------------------------------------------------------------
# zeta engine

class BadGcd(ToolkitError):
    """A stratum's stored multiplicity gcd disagrees with its divisors."""


class UnknownDivisor(ToolkitError):
    """A stratum references a divisor id that was never declared."""


class MalformedInput(ToolkitError):
    """Structurally broken input file."""


# ---------------------------------------------------------------------------
# arc oracle

class ConstraintMismatch(ToolkitError):
    """The symbolic arc conditions do not reduce to the triangular system."""


# ---------------------------------------------------------------------------
# expression front end

class ExpressionSyntaxError(ToolkitError):
    """Parse error with position information."""

    def __init__(self, message, line=1, column=0, expected=()):
        super().__init__(message)
        self.line = line
        self.column = column
        self.expected = tuple(expected)

    def __str__(self):
        base = super().__str__()
        loc = f" at line {self.line}, column {self.column}"
        if self.expected:
            return f"{base}{loc} (expected {', '.join(self.expected)})"
        return base + loc


class UnknownAtom(ExpressionSyntaxError):
    """Unknown function name in an expression."""


class ArityError(ExpressionSyntaxError):
    """Wrong number or kind of arguments to an expression function."""
