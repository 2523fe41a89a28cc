import os

DEFAULT_BUDGET = 100_000
BUDGET_ENV = "SEQSAVAGE_BUDGET"


def default_budget():
    """Enumeration budget, overridable through ``SEQSAVAGE_BUDGET``."""
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        value = int(raw)
        if value <= 0:
            raise ValueError(f"{BUDGET_ENV} must be positive, got {raw!r}")
        return value
    return DEFAULT_BUDGET


def check_budget(what, count, budget=None):
    from .errors import BudgetExceeded

    if budget is None:
        budget = default_budget()
    if count > budget:
        raise BudgetExceeded(what, count, budget)
