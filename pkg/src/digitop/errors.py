"""Shared exception types."""


class BudgetError(RuntimeError):
    """Raised when an operation would exceed a configured resource budget."""

    def __init__(self, what: str, needed, budget):
        super().__init__(f"{what} needs {needed} but the budget is {budget}")
        self.what = what
        self.needed = needed
        self.budget = budget
