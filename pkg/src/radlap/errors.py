"""Exception hierarchy shared by all radlap modules."""


class RadlapError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RadlapError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """A Gamma factor in a closed form is evaluated at a pole."""


class NonConvergence(RadlapError):
    """An iterative evaluation exhausted its budget without converging."""


class NonFiniteEvaluation(RadlapError):
    """An integrand returned NaN or infinity at an interior node."""


class DivergentExponent(DomainError):
    """Endpoint singularity exponent <= -1: the integral diverges."""


class DivergentTail(DomainError):
    """Tail decay exponent <= 1: the semi-infinite integral diverges."""


class SingularityError(DomainError):
    """Evaluation requested exactly at a non-integrable singularity."""


class MissingDerivative(RadlapError):
    """The operation needs a derivative the profile does not provide."""


class EvaluationError(RadlapError):
    """A profile evaluation failed."""


class IntegrabilityError(RadlapError):
    """The profile's tail/origin behaviour cannot be certified."""


class PreconditionError(RadlapError):
    """A checker was invoked with its stated precondition violated."""


class InfiniteDerivative(RadlapError):
    """A closed-form derivative is +infinity for these parameters."""
