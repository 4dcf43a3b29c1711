"""Exception types shared across the package."""


class WindowViolation(ValueError):
    """Degree index n lies outside [max(N, M), N+M)."""


class NegativeFactorial(ValueError):
    """A factorial argument went negative; the parameter window is violated."""


class ZeroPolynomial(ValueError):
    """An operation received the identically zero polynomial."""


class EndpointRoot(ValueError):
    """Root counting requested on an interval whose endpoint is a root."""


class DegenerateDenominator(ValueError):
    """A boundary closed form divides by zero (chain longer than min(N, M))."""


class IrregularChain(ValueError):
    """Chain fails its regularity validation (the potential would have poles)."""


class NonRegularChain(IrregularChain):
    """Orthogonality requested for a chain that is not regular."""


class BadIndex(ValueError):
    """Eigenfunction index is negative but not one of the chain's -n_i - 1."""


class WrongArity(ValueError):
    """Operation requires a chain of a specific length."""


class PoleAtZ(ArithmeticError):
    """Evaluation requested at a pole of the rational expression."""


class GaugeMismatch(ValueError):
    """Gauge exponents do not clear to a polynomial residual."""


class SolverFailure(RuntimeError):
    """The tridiagonal eigensolver did not converge."""


class SweepOutsideRegularity(ValueError):
    """A requested parameter sweep leaves the admissible interval."""
