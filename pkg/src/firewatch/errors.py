"""Exception types shared across the package.

The split mirrors the CLI exit codes: configuration/parameter problems exit
with 2, numeric domain problems with 3.
"""


class ParameterError(ValueError):
    """A model, layout or scenario parameter is invalid (e.g. rate <= 0)."""


class DomainError(ValueError):
    """A numeric argument is outside the domain of an operation."""


class EstimatorError(DomainError):
    """An empirical estimator was fed input it cannot work with."""
