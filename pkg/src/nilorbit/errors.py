"""Exception types. All derive from :class:`NilorbitError`."""


class NilorbitError(ValueError):
    pass


class InvalidTypeError(NilorbitError):
    """Bad Lie type, rank, or automorphism."""


class InvalidLabelError(NilorbitError):
    """An orbit label that is not valid for its type."""


class UnsupportedError(NilorbitError):
    """The requested parameterization or computation is not available for this type."""


class HypothesisError(NilorbitError):
    """A standing hypothesis (good characteristic, p > 3, q a power of p) is violated."""


class BudgetError(NilorbitError):
    """An exhaustive enumeration would exceed the configured budget."""

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} candidates, budget is {budget} "
            "(raise it with NILORBIT_BUDGET or --budget)"
        )
