"""Error type shared by every module."""


class GammaAGError(ValueError):
    """Structured validation/usage error.

    ``code`` is a stable machine-readable tag (``WRONG_SHAPE``,
    ``OUT_OF_RANGE``, ``SIZE_MISMATCH``, ...); ``where`` optionally locates
    the offending entry.
    """

    def __init__(self, code, message, where=None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.where = where
