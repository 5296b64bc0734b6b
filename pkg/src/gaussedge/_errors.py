"""Package-wide exception types."""


class AccuracyError(RuntimeError):
    """A numerical result failed its convergence or sanity contract."""
