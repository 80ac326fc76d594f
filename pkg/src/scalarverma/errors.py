"""Error types shared across the package."""


class InvariantError(RuntimeError):
    """An internal consistency check failed.

    Raised only when the library detects that one of its own structural
    invariants is broken (never for bad user input).  The CLI maps this to
    exit code 3.
    """


class InsufficientWindowError(ValueError):
    """A scan window is too small to support the requested summary."""
