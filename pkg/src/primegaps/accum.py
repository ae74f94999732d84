"""Compensated accumulation helpers.

Long scans add millions of floating-point terms and must produce
bit-identical results across runs, worker counts, and checkpoint
resumes.  The scheme used throughout the toolkit: per-block subtotals
are computed with ``math.fsum`` (exactly rounded, order-independent
within the block), and the running total is carried by a Neumaier
accumulator whose (sum, compensation) state is small enough to
serialize into a checkpoint.
"""

from __future__ import annotations

import math


class NeumaierSum:
    """Running compensated sum with serializable state."""

    __slots__ = ("total", "comp")

    def __init__(self, total: float = 0.0, comp: float = 0.0):
        self.total = total
        self.comp = comp

    def add(self, value: float) -> None:
        t = self.total + value
        if abs(self.total) >= abs(value):
            self.comp += (self.total - t) + value
        else:
            self.comp += (value - t) + self.total
        self.total = t

    @property
    def value(self) -> float:
        return self.total + self.comp

    def state(self) -> list[float]:
        return [self.total, self.comp]

    @classmethod
    def from_state(cls, state) -> "NeumaierSum":
        return cls(float(state[0]), float(state[1]))


def block_sum(values) -> float:
    """Exactly rounded sum of one block of terms (wraps math.fsum)."""
    return math.fsum(values)
