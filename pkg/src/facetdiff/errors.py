"""Exception taxonomy shared across the lab."""


class RejectedInputError(ValueError):
    """An operation received data outside its declared domain."""


class ConfigurationError(ValueError):
    """A config / manifest / sampler setting is internally inconsistent."""


class EvaluationError(RuntimeError):
    """An evaluation precondition failed (bad covariance, accuracy gate, ...)."""


class LeakageError(RuntimeError):
    """A held-out record was found in a training split. Hard abort."""


class DivergenceError(RuntimeError):
    """A loss term went non-finite during training. Hard abort."""
