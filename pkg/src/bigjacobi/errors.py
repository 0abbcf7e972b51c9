"""Exception types raised by the bigjacobi package."""


class BigJacobiError(Exception):
    """Base class for all package errors."""


class ParameterError(BigJacobiError, ValueError):
    """Family or limit parameters outside the admissible region."""


class ScalarKindError(BigJacobiError, TypeError):
    """Exact and floating point scalars were mixed in one computation."""


class DegenerateSpectrumError(BigJacobiError, ArithmeticError):
    """Two eigenvalues of L0 coincide, so the eigenpolynomial is not unique."""


class PoleError(BigJacobiError, ArithmeticError):
    """A Pochhammer symbol in a denominator vanished before termination."""


class DomainError(BigJacobiError, ValueError):
    """Point outside the open support of the weight."""


class ZeroAtNodeError(BigJacobiError, ArithmeticError):
    """Christoffel transform requested at a zero of some P_n."""


class InconsistencyError(BigJacobiError, ArithmeticError):
    """An identity that must hold exactly was found to fail."""


class DegenerateDenominatorError(BigJacobiError, ZeroDivisionError):
    """A recurrence coefficient formula hit a vanishing denominator."""


class ConvergenceError(BigJacobiError, ArithmeticError):
    """An eigen decomposition failed to converge."""
