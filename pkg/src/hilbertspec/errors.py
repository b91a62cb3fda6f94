"""Exception hierarchy.

Every anticipated domain failure has its own class so the CLI can report the
class name verbatim and tests can assert on it.
"""


class HilbertSpecError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(HilbertSpecError, ValueError):
    """Malformed polynomial text or JSON input."""


class VariableCollision(HilbertSpecError, ValueError):
    """A variable name is used both as the polynomial variable and inside a coefficient."""


class ZeroPolynomial(HilbertSpecError, ValueError):
    pass


class InexactDivision(HilbertSpecError, ArithmeticError):
    """Division left a nonzero remainder."""


class ZeroConstantTerm(HilbertSpecError, ValueError):
    """p(0) = 0, so some root ratio has a zero denominator."""


class DegreeTooSmall(HilbertSpecError, ValueError):
    pass


class NotMonic(HilbertSpecError, ValueError):
    """Symbolic polynomial whose leading coefficient is not a constant."""


class SingularMatrix(HilbertSpecError, ArithmeticError):
    pass


class NonConvergence(HilbertSpecError, ArithmeticError):
    pass


class DegenerateGap(HilbertSpecError, ArithmeticError):
    """Extreme eigenvalue moduli are too close to classify at the given tolerance."""


class NotProximal(HilbertSpecError, ValueError):
    pass


class NotExact(HilbertSpecError, TypeError):
    """An exact-only operation was given a floating-point matrix."""


class PointsCoincide(HilbertSpecError, ValueError):
    pass


class PointNotInterior(HilbertSpecError, ValueError):
    pass


class InvalidDomain(HilbertSpecError, ValueError):
    pass


class InvalidOrders(HilbertSpecError, ValueError):
    pass


class RelatorFailure(HilbertSpecError, ValueError):
    """A declared relator does not evaluate to +-I."""


class UnexpectedNonProximal(HilbertSpecError, ArithmeticError):
    """An infinite-order group element failed the proximality test."""


class TableMismatch(HilbertSpecError, ValueError):
    """Two spectrum tables were built over different word sets."""
