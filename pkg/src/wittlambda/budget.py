import os

DEFAULT_BUDGET = 10**7


def default_budget():
    """Enumeration budget: WITTLAMBDA_BUDGET if set, else 10**7."""
    env = os.environ.get("WITTLAMBDA_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


def check_budget(needed, budget=None):
    from .errors import BudgetExceeded

    if budget is None:
        budget = default_budget()
    if needed > budget:
        raise BudgetExceeded(needed, budget)
