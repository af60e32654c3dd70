class InputError(ValueError):
    """Malformed or dimensionally inconsistent input."""


class PreconditionError(ValueError):
    """An operation was called on data that violates its hypotheses.

    ``problems`` lists every violation found, not only the first one.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
