"""Reduction-step budgets for the Groebner/syzygy loops.

Every engine invocation (a Buchberger run, a syzygy run, a normal-form
computation) gets its own fresh counter; `limit` is the number of
single leading-term cancellations the invocation may perform before it
fails loudly with BudgetExceededError.
"""

from .errors import BudgetExceededError

DEFAULT_LIMIT = 10**6


class Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = DEFAULT_LIMIT if limit is None else int(limit)
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceededError(
                f"budget exceeded: more than {self.limit} reduction steps"
            )
