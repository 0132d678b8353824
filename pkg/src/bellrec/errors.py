"""Exceptions shared across the library."""


class PathMismatchError(RuntimeError):
    """Two supposedly equivalent computation paths disagreed.

    This is a bug sentinel: the identities relating the paths are exact, so a
    mismatch can only come from an implementation error, never from input data.
    """
