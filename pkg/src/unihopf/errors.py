"""Exceptions shared across modules."""


class BudgetExceeded(ValueError):
    """A computation would exceed its configured size budget."""
