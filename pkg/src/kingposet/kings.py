"""Bonds, separators, and the king / cylindrical-king classes."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .parallel import ordered_map
from .perm_core import Permutation, delete_value

__all__ = [
    "Bond",
    "BondKind",
    "Orientation",
    "PermClass",
    "Separator",
    "bonds",
    "ck_children",
    "enumerate_kings",
    "in_class",
    "is_cylindrical_king",
    "is_king",
    "separators",
]


class PermClass(str, enum.Enum):
    PLAIN = "PLAIN"
    KING = "KING"
    CYLINDRICAL = "CYLINDRICAL"

    @classmethod
    def from_name(cls, name: str) -> "PermClass":
        aliases = {"plain": cls.PLAIN, "s": cls.PLAIN, "king": cls.KING, "k": cls.KING,
                   "ck": cls.CYLINDRICAL, "cylindrical": cls.CYLINDRICAL}
        try:
            return aliases[name.lower()]
        except KeyError:
            raise ValueError(f"unknown class {name!r}") from None


class BondKind(str, enum.Enum):
    REGULAR = "REGULAR"
    EDGE = "EDGE"


class Orientation(str, enum.Enum):
    VERTICAL = "VERTICAL"
    HORIZONTAL = "HORIZONTAL"


@dataclass(frozen=True)
class Bond:
    kind: BondKind
    positions: tuple[int, int]  # (i, i+1), or (n, 1) for an edge bond
    values: tuple[int, int]

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "positions": list(self.positions),
                "values": list(self.values)}


@dataclass(frozen=True, order=True)
class Separator:
    position: int
    value: int
    kind: BondKind
    orientation: Orientation

    def to_json(self) -> dict:
        return {"value": self.value, "position": self.position,
                "kind": self.kind.value, "orientation": self.orientation.value}


def bonds(sigma: Sequence[int]) -> list[Bond]:
    """All cyclic bonds, reading ``sigma_{n+1}`` as ``sigma_1``.

    When n = 2 the single adjacency is reported once, as a regular bond.
    """
    n = len(sigma)
    out = []
    for i in range(n - 1):
        if abs(sigma[i] - sigma[i + 1]) == 1:
            out.append(Bond(BondKind.REGULAR, (i + 1, i + 2), (sigma[i], sigma[i + 1])))
    if n >= 3 and abs(sigma[-1] - sigma[0]) == 1:
        out.append(Bond(BondKind.EDGE, (n, 1), (sigma[-1], sigma[0])))
    return out


def is_king(sigma: Sequence[int]) -> bool:
    if not sigma:
        return False
    return all(abs(a - b) != 1 for a, b in zip(sigma, sigma[1:]))


def is_cylindrical_king(sigma: Sequence[int]) -> bool:
    n = len(sigma)
    if n == 0:
        return False
    if n == 1:
        return True
    return is_king(sigma) and abs(sigma[0] - sigma[-1]) != 1


def in_class(sigma: Sequence[int], cls: PermClass) -> bool:
    if cls is PermClass.KING:
        return is_king(sigma)
    if cls is PermClass.CYLINDRICAL:
        return is_cylindrical_king(sigma)
    return True


def _extend(n: int, cyclic: bool, prefix: list[int], used: list[bool]) -> Iterator[Permutation]:
    depth = len(prefix)
    last = prefix[-1]
    if depth == n - 1:
        for v in range(1, n + 1):
            if not used[v] and abs(v - last) != 1 and not (cyclic and abs(v - prefix[0]) == 1):
                yield Permutation._trusted(prefix + [v])
        return
    for v in range(1, n + 1):
        if used[v] or abs(v - last) == 1:
            continue
        used[v] = True
        prefix.append(v)
        yield from _extend(n, cyclic, prefix, used)
        prefix.pop()
        used[v] = False


def _with_first(args: tuple[int, bool, int]) -> list[Permutation]:
    n, cyclic, first = args
    used = [False] * (n + 1)
    used[first] = True
    return list(_extend(n, cyclic, [first], used))


def enumerate_kings(n: int, cls: PermClass = PermClass.KING, jobs: int = 1) -> Iterator[Permutation]:
    """Yield K_n or CK_n in lexicographic order.

    With ``jobs > 1`` the search is split by first entry across processes and
    the parts are concatenated in order, so the output is unchanged.
    """
    cls = PermClass(cls)
    if cls is PermClass.PLAIN:
        raise ValueError("enumerate_kings takes KING or CYLINDRICAL")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    cyclic = cls is PermClass.CYLINDRICAL
    if n == 1:
        yield Permutation._trusted((1,))
        return
    if jobs <= 1:
        for first in range(1, n + 1):
            used = [False] * (n + 1)
            used[first] = True
            yield from _extend(n, cyclic, [first], used)
        return
    tasks = [(n, cyclic, first) for first in range(1, n + 1)]
    for part in ordered_map(_with_first, tasks, jobs):
        yield from part


def separators(sigma: Sequence[int]) -> list[Separator]:
    """Cyclic separators: entries whose deletion creates a new cyclic bond.

    A value can appear in several records, one per (kind, orientation).
    Records are sorted by position.
    """
    n = len(sigma)
    if n < 3:
        return []
    where = {v: i for i, v in enumerate(sigma, 1)}
    found = set()

    def add(value: int, kind: BondKind, orientation: Orientation) -> None:
        found.add(Separator(where[value], value, kind, orientation))

    for i in range(1, n - 1):
        # [.., b, a, b+-1, ..]
        if abs(sigma[i - 1] - sigma[i + 1]) == 1:
            add(sigma[i], BondKind.REGULAR, Orientation.VERTICAL)
    for i in range(n - 1):
        # a+-1, a-+1 side by side, a elsewhere
        x, y = sigma[i], sigma[i + 1]
        if abs(x - y) == 2:
            add((x + y) // 2, BondKind.REGULAR, Orientation.HORIZONTAL)
    if abs(sigma[0] - sigma[n - 2]) == 1:
        add(sigma[n - 1], BondKind.EDGE, Orientation.VERTICAL)
    if abs(sigma[n - 1] - sigma[1]) == 1:
        add(sigma[0], BondKind.EDGE, Orientation.VERTICAL)
    if abs(sigma[0] - sigma[n - 1]) == 2:
        add((sigma[0] + sigma[n - 1]) // 2, BondKind.EDGE, Orientation.HORIZONTAL)
    return sorted(found)


def ck_children(sigma: Sequence[int]) -> set[Permutation]:
    """Distinct single-value deletions of ``sigma`` that stay cylindrical kings."""
    n = len(sigma)
    if n < 2:
        raise ValueError(f"ck_children needs n >= 2, got n={n}")
    if not is_cylindrical_king(sigma):
        raise ValueError(f"{Permutation(sigma)} is not a cylindrical king permutation")
    out = set()
    for a in range(1, n + 1):
        child = delete_value(sigma, a)
        if is_cylindrical_king(child):
            out.add(child)
    return out
