"""Exception types shared across the package."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed.

    Raised when two routes to the same quantity disagree (closed form vs
    linear-algebra oracle, assembled surface data vs its known total).  This
    always indicates a bug in the library, never bad user input.
    """
