"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """An argument violates an operation's preconditions."""


class InvalidConfigError(ValueError):
    """A configuration object is internally inconsistent."""


class EmptyInputError(InvalidInputError):
    """An operation received an empty point set or cohort."""


class PositivityViolationError(ValueError):
    """A propensity or at-risk probability of zero makes a weight undefined."""


class DegenerateCostError(ArithmeticError):
    """exp(-lambda * M) underflowed to an all-zero row or column.

    Raised instead of silently producing a zero transport plan; rescale the
    embeddings (or lower lambda) so pairwise costs stay below ~69/lambda.
    """


class OracleScopeError(ValueError):
    """A test oracle was asked for an instance outside its supported size."""


class TrainingDivergedError(RuntimeError):
    """Training produced a non-finite loss; carries the last good checkpoint."""

    def __init__(self, message, checkpoint=None):
        super().__init__(message)
        self.checkpoint = checkpoint


class NotApplicableError(RuntimeError):
    """The operation does not apply to the model's current configuration."""


class ContractViolationError(RuntimeError):
    """Internal state mismatch, e.g. a backward pass with a stale cache."""


class SelectionFailedError(RuntimeError):
    """Every candidate in a hyperparameter grid failed to train."""
