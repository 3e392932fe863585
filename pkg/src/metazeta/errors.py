"""Exception types shared by every module in the library."""


class MetazetaError(Exception):
    """Base class for all metazeta errors."""


class InvalidParameterError(MetazetaError, ValueError):
    """An argument violates the documented contract of an operation."""


class HypothesisError(InvalidParameterError):
    """A closed-form shortcut was invoked outside its hypotheses.

    Raised instead of silently falling back, so the shortcut stays
    testable in isolation; callers that want a generic answer must
    recompute directly.
    """


class ResourceLimitError(MetazetaError, RuntimeError):
    """A computation would exceed the configured size bounds."""


class UnsupportedShapeError(MetazetaError, ValueError):
    """A structural case with no closed formula; use the enumerator."""


class InternalInconsistencyError(MetazetaError, RuntimeError):
    """An internal invariant failed, signalling unsupported input or a bug."""
