"""Exception types raised by the sensing toolkit."""


class StreamTooShortError(ValueError):
    """Input sample stream is too short for the requested segmentation."""

    def __init__(self, available: int, required: int):
        self.available = available
        self.required = required
        super().__init__(
            f"stream has {available} samples but at least {required} are required"
        )


class DegenerateInputError(ValueError):
    """A statistic is undefined for this input (e.g. zero eigenvalue)."""


class MissingPriorError(ValueError):
    """A detector was invoked without a prior-knowledge field it requires."""

    def __init__(self, detector: str, field: str):
        self.detector = detector
        self.field = field
        super().__init__(f"detector {detector!r} requires prior knowledge {field!r}")


class ConvergenceError(RuntimeError):
    """An iterative solver exceeded its iteration cap."""

    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (last residual {residual:.3e})")


class FeatureFileError(ValueError):
    """A feature file is malformed or violates a feature invariant."""
