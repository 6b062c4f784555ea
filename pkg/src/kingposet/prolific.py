"""k-prolific permutations, checked by definition and by the breadth criterion."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .kings import PermClass, in_class
from .metrics import breadth, cyclic_breadth
from .perm_core import Permutation, standardize

__all__ = [
    "ORACLE_MAX_N",
    "ProlificReport",
    "distinct_patterns",
    "is_k_prolific",
    "prolific_criterion",
]

# The definitional check walks every (n-k)-subset of entries.
ORACLE_MAX_N = 16


@dataclass(frozen=True)
class ProlificReport:
    k: int
    cls: PermClass
    distinct_patterns: int
    max_possible: int
    all_in_class: bool
    verdict: bool

    def to_json(self) -> dict:
        return {"k": self.k, "class": self.cls.value,
                "distinct_patterns": self.distinct_patterns,
                "max_possible": self.max_possible,
                "all_in_class": self.all_in_class, "verdict": self.verdict}


def _check_args(sigma: Sequence[int], k: int, cls: PermClass) -> None:
    n = len(sigma)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must satisfy 1 <= k <= n-1 = {n - 1}, got k={k}")
    if not in_class(sigma, cls):
        name = "a king" if cls is PermClass.KING else "a cylindrical king"
        raise ValueError(f"{Permutation(sigma)} is not {name} permutation")


def distinct_patterns(sigma: Sequence[int], k: int) -> set[Permutation]:
    """Patterns left after deleting every possible set of ``k`` entries."""
    n = len(sigma)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must satisfy 1 <= k <= n-1 = {n - 1}, got k={k}")
    return {standardize(sub) for sub in combinations(tuple(sigma), n - k)}


def is_k_prolific(sigma: Sequence[int], k: int, cls: PermClass = PermClass.PLAIN) -> ProlificReport:
    """Definitional test: all C(n, k) deletions distinct, and (for KING or
    CYLINDRICAL) every resulting pattern in the class at size n - k."""
    cls = PermClass(cls)
    if len(sigma) > ORACLE_MAX_N:
        raise ValueError(f"oracle too large: n={len(sigma)} exceeds {ORACLE_MAX_N}")
    _check_args(sigma, k, cls)
    patterns = distinct_patterns(sigma, k)
    everything_in = all(in_class(p, cls) for p in patterns)
    top = comb(len(sigma), k)
    return ProlificReport(k=k, cls=cls, distinct_patterns=len(patterns), max_possible=top,
                          all_in_class=everything_in,
                          verdict=len(patterns) == top and everything_in)


def prolific_criterion(sigma: Sequence[int], k: int, cls: PermClass) -> bool:
    """``br >= k + 3`` for KING, ``cbr >= k + 3`` for CYLINDRICAL."""
    cls = PermClass(cls)
    if cls is PermClass.PLAIN:
        raise ValueError("prolific_criterion takes KING or CYLINDRICAL")
    _check_args(sigma, k, cls)
    metric = breadth if cls is PermClass.KING else cyclic_breadth
    return metric(sigma).value >= k + 3
