from __future__ import annotations

import os
import time

from .errors import FeasibilityCapExceeded

ENV_BUDGET_MS = "SCRAMBLE_LAB_BUDGET_MS"


class Budget:
    """Node-count and wall-clock cap for exhaustive searches.

    ``tick`` is called once per search node; the clock is only read every
    256 ticks so the overhead stays negligible.
    """

    def __init__(self, nodes: int | None = None, ms: float | None = None, label: str = "search"):
        self.nodes = nodes
        self.label = label
        self.used = 0
        self.deadline = None if ms is None else time.monotonic() + ms / 1000.0

    @classmethod
    def from_env(cls, nodes: int | None = None, label: str = "search") -> "Budget":
        raw = os.environ.get(ENV_BUDGET_MS)
        return cls(nodes=nodes, ms=float(raw) if raw else None, label=label)

    def tick(self, k: int = 1) -> None:
        self.used += k
        if self.nodes is not None and self.used > self.nodes:
            raise FeasibilityCapExceeded(f"{self.label}: node budget {self.nodes} exhausted")
        if self.deadline is not None and (self.used & 0xFF) == 0 and time.monotonic() > self.deadline:
            raise FeasibilityCapExceeded(f"{self.label}: time budget exhausted")


def unlimited(label: str = "search") -> Budget:
    return Budget.from_env(label=label)
