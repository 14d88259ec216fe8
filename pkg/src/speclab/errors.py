"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2, NumericalError -> 3,
BudgetExceededError -> 4.
"""


class SpeclabError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(SpeclabError):
    """Invalid experiment configuration or malformed input file."""


class BudgetExceededError(SpeclabError):
    """A configured size/retry/cost budget was exceeded."""


class GenerationError(BudgetExceededError):
    """Pairing-model sampler exhausted its retry budget."""


class NumericalError(SpeclabError):
    """An iterative numerical procedure failed to reach its tolerance."""


class NoPairsError(SpeclabError):
    """No vertex pairs exist at the requested distance (k beyond diameter)."""


class ZeroComponentError(SpeclabError):
    """An eigenvector component is numerically zero, so its sign is undefined."""
