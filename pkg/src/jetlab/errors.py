"""Exception types shared across the package."""


class StructureError(ValueError):
    """Operands disagree structurally (different k, or mixed scalar modes)."""


class DomainError(ValueError):
    """An argument is outside the operation's domain."""


class ResourceError(ValueError):
    """A request would exceed the configured resource bounds."""


class ScaleWindowError(ValueError):
    """Requested counting scales are finer than the sample can support.

    Carries ``min_scale`` (the finest trustworthy epsilon) and
    ``suggested_max_depth`` (largest m with 2**-m >= min_scale).
    """

    def __init__(self, msg, min_scale=None, suggested_max_depth=None):
        super().__init__(msg)
        self.min_scale = min_scale
        self.suggested_max_depth = suggested_max_depth


class InsufficientDataError(ValueError):
    """Too few usable samples or scales to fit anything meaningful."""


class ParseError(ValueError):
    """Malformed serialized input; message carries the offending location."""
