"""Manhattan and cyclic Manhattan distances on the plot of a permutation."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

__all__ = [
    "UNBOUNDED",
    "MetricReport",
    "breadth",
    "cyclic_breadth",
    "cyclic_distance",
    "cyclic_position_distance",
    "manhattan_distance",
]

#: Breadth of a permutation with fewer than two entries.  Compares greater
#: than every integer, so ``report.value >= 3`` needs no special case.
UNBOUNDED = math.inf


@dataclass(frozen=True)
class MetricReport:
    value: float  # int, or UNBOUNDED
    witness: Optional[tuple[int, int]] = None

    @property
    def bounded(self) -> bool:
        return self.value != UNBOUNDED

    def to_json(self) -> dict:
        if not self.bounded:
            return {"value": None, "witness": None}
        return {"value": int(self.value), "witness": list(self.witness)}


def _check_positions(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"positions ({i}, {j}) out of range 1..{n}")
    if i == j:
        raise ValueError(f"positions must differ, got ({i}, {j})")


def manhattan_distance(sigma: Sequence[int], i: int, j: int) -> int:
    """L1 distance between the points ``(i, sigma_i)`` and ``(j, sigma_j)``."""
    _check_positions(len(sigma), i, j)
    return abs(i - j) + abs(sigma[i - 1] - sigma[j - 1])


def cyclic_position_distance(n: int, i: int, j: int) -> int:
    """Length of the shorter arc from ``i`` to ``j`` on a circle of ``n`` slots.

    Requires ``1 <= i < j <= n``.
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    return min(j - i, n - j + i)


def cyclic_distance(sigma: Sequence[int], i: int, j: int) -> int:
    """Value gap plus cyclic position gap; symmetric in ``i`` and ``j``."""
    n = len(sigma)
    _check_positions(n, i, j)
    if i > j:
        i, j = j, i
    return abs(sigma[j - 1] - sigma[i - 1]) + min(j - i, n - j + i)


def _scan(sigma: Sequence[int], cyclic: bool) -> MetricReport:
    n = len(sigma)
    if n < 2:
        return MetricReport(UNBOUNDED)
    best, witness = None, None
    for i in range(n - 1):
        vi = sigma[i]
        for j in range(i + 1, n):
            gap = j - i
            if cyclic and n - gap < gap:
                gap = n - gap
            d = gap + abs(sigma[j] - vi)
            # strict: the first (lexicographically least) pair wins ties
            if best is None or d < best:
                best, witness = d, (i + 1, j + 1)
    return MetricReport(best, witness)


def breadth(sigma: Sequence[int]) -> MetricReport:
    """Minimum Manhattan distance over all pairs of entries."""
    return _scan(sigma, cyclic=False)


def cyclic_breadth(sigma: Sequence[int]) -> MetricReport:
    """Minimum cyclic distance over all pairs of entries."""
    return _scan(sigma, cyclic=True)
