"""Exception types shared across modules."""


class BudgetExceededError(ValueError):
    """An exhaustive search was asked to run beyond its documented budget.

    Raised instead of attempting the search, so callers get an explicit
    "infeasible" signal and never a silently wrong or absurdly slow answer.
    """


class CrossCheckError(RuntimeError):
    """Two independent computations of the same quantity disagreed.

    This marks states the underlying mathematics rules out. If it ever
    fires, there is a bug somewhere; surfacing it loudly is the point.
    """
