class FFClassError(ValueError):
    """A mathematical precondition failed (bad field, bad discriminant, ...)."""


class NotPositiveError(FFClassError):
    pass


class GenusConsistencyError(FFClassError):
    pass
