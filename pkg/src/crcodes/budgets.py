"""Enumeration budgets shared by the analysis routines.

Every exhaustive pass states up front how many objects it would walk and
refuses with BudgetExceeded when that exceeds the relevant cap, instead
of silently grinding.  The caps are per-call arguments so the CLI can
raise or lower them.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Budgets:
    max_syndromes: int = 1 << 24
    max_codewords: int = 1 << 26
    max_vectors: int = 1 << 20


DEFAULT_BUDGETS = Budgets()


class BudgetExceeded(Exception):
    def __init__(self, budget: str, needed: int, limit: int):
        super().__init__(
            f"{budget}: needs {needed} but the budget allows {limit}"
        )
        self.budget = budget
        self.needed = needed
        self.limit = limit
