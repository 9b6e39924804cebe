from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OpCounts:
    """Exact tally of bit operations performed by an encode or decode pass.

    Instances are plain accumulators owned by the caller. Pass one into an
    instrumented routine and read it back afterwards; use one per thread and
    add them together if counting in parallel.
    """

    additions: int = 0
    multiplications: int = 0
    comparisons: int = 0

    def __add__(self, other: OpCounts) -> OpCounts:
        return OpCounts(
            self.additions + other.additions,
            self.multiplications + other.multiplications,
            self.comparisons + other.comparisons,
        )

    def scaled(self, factor: int) -> OpCounts:
        return OpCounts(
            self.additions * factor,
            self.multiplications * factor,
            self.comparisons * factor,
        )
