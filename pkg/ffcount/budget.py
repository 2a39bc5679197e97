"""Work accounting for the counting loops."""
from __future__ import annotations

import logging
from threading import Lock

from ffcount.errors import WorkLimitExceeded

logger = logging.getLogger(__name__)


class WorkBudget:
    """
    Shared budget of elementary steps.

    Counting jobs estimate their cost up front and charge it here; once the running
    total would pass ``limit`` the charge is refused with WorkLimitExceeded.
    """

    def __init__(self, limit: int = 1_000_000_000):
        self.limit = int(limit)
        self.spent = 0
        self.lock = Lock()

    @property
    def remaining(self) -> int:
        return max(self.limit - self.spent, 0)

    def charge(self, steps: int, *, label: str = "count") -> int:
        """Reserve ``steps``; returns the total spent so far."""
        with self.lock:
            if self.spent + steps > self.limit:
                raise WorkLimitExceeded(
                    f"{label} needs about {steps} steps, {self.remaining} remain of {self.limit}",
                    details={"label": label, "steps": int(steps), "limit": self.limit, "spent": self.spent},
                )
            self.spent += steps
            logger.debug("%s charged %d steps (%d/%d)", label, steps, self.spent, self.limit)
            return self.spent
