"""Permutations in one-line notation and the pattern operations on them.

A :class:`Permutation` is an immutable tuple holding ``sigma_1 .. sigma_n``.
Indexing follows Python (``sigma[0]`` is the first entry); every function in
this package that takes a *position* argument counts from 1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "OrbitClass",
    "ParseError",
    "Permutation",
    "complement",
    "contains",
    "delete_value",
    "delete_values",
    "format_perm",
    "inverse",
    "orbit",
    "parse",
    "reverse",
    "rotate_left",
    "standardize",
]


class ParseError(ValueError):
    """Raised when text or a word does not describe a permutation."""


class Permutation(tuple):
    """A permutation of ``1..n`` stored as its one-line word.

    >>> Permutation([3, 1, 4, 2, 5])
    Permutation('[31425]')
    >>> str(Permutation(range(1, 11)))
    '1,2,3,4,5,6,7,8,9,10'
    """

    __slots__ = ()

    def __new__(cls, word: Iterable[int] = ()) -> "Permutation":
        word = tuple(word)
        n = len(word)
        seen = set()
        for v in word:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"entry {v!r} is not an integer")
            if not 1 <= v <= n:
                raise ParseError(f"value {v} out of range 1..{n}")
            if v in seen:
                raise ParseError(f"duplicate value {v}")
            seen.add(v)
        return tuple.__new__(cls, word)

    @classmethod
    def _trusted(cls, word: Iterable[int]) -> "Permutation":
        # Skips validation; only for words produced by the operations below.
        return tuple.__new__(cls, word)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(self)

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Permutation('{format_perm(self)}')"


def format_perm(sigma: Sequence[int]) -> str:
    """Canonical text: ``[31425]`` when n <= 9, ``10,3,1,...`` otherwise."""
    if len(sigma) <= 9:
        return "[" + "".join(str(v) for v in sigma) + "]"
    return ",".join(str(v) for v in sigma)


_SEPARATORS = re.compile(r"[,\s]")


def parse(text: str) -> Permutation:
    """Parse ``"[5246173]"``, ``"5,2,4,6,1,7,3"`` or ``"5 2 4 6 1 7 3"``.

    Bracketed text without separators is read one digit per entry.
    """
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1].strip()
        if not body:
            return Permutation()
        if not _SEPARATORS.search(body):
            if not body.isdigit():
                raise ParseError(f"bad token {body!r} in {text!r}")
            return _checked([int(c) for c in body], list(body), text)
    if not body:
        raise ParseError(f"empty token in {text!r}")
    tokens = [t for t in re.split(r"\s*,\s*|\s+", body)]
    values = []
    for tok in tokens:
        if not tok:
            raise ParseError(f"empty token in {text!r}")
        if not tok.isdigit():
            raise ParseError(f"bad token {tok!r} in {text!r}")
        values.append(int(tok))
    return _checked(values, tokens, text)


def _checked(values: list[int], tokens: list[str], text: str) -> Permutation:
    n = len(values)
    seen = set()
    for v, tok in zip(values, tokens):
        if not 1 <= v <= n:
            raise ParseError(f"token {tok!r} out of range 1..{n} in {text!r}")
        if v in seen:
            raise ParseError(f"duplicate token {tok!r} in {text!r}")
        seen.add(v)
    return Permutation._trusted(values)


def standardize(word: Sequence[int]) -> Permutation:
    """Replace every entry by its rank within the word."""
    ranks = {v: r for r, v in enumerate(sorted(word), 1)}
    if len(ranks) != len(word):
        raise ParseError(f"word {list(word)} has repeated entries")
    return Permutation._trusted(ranks[v] for v in word)


def delete_value(sigma: Sequence[int], a: int) -> Permutation:
    """Remove the value ``a`` and standardize."""
    if not 1 <= a <= len(sigma):
        raise ValueError(f"value {a} out of range 1..{len(sigma)}")
    return Permutation._trusted(v - (v > a) for v in sigma if v != a)


def delete_values(sigma: Sequence[int], values: Iterable[int]) -> Permutation:
    """Remove every value in ``values`` (original labels) and standardize once."""
    drop = set(values)
    n = len(sigma)
    for a in drop:
        if not 1 <= a <= n:
            raise ValueError(f"value {a} out of range 1..{n}")
    if not drop:
        return Permutation._trusted(sigma)
    return standardize([v for v in sigma if v not in drop])


def contains(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    """True when ``pi`` occurs as a pattern in ``sigma`` (``pi == sigma`` counts).

    Backtracking over positions of ``sigma``; the value chosen for the k-th
    pattern entry must lie strictly between the values already matched to its
    nearest smaller and larger pattern entries.
    """
    k, n = len(pi), len(sigma)
    if k > n:
        return False
    if k == 0:
        return True
    if k == n:
        return tuple(pi) == tuple(sigma)
    # lower[t] / upper[t]: index of the nearest smaller / larger entry of pi
    # among pi[0..t-1], or -1.
    lower = [-1] * k
    upper = [-1] * k
    for t in range(k):
        lo_val, hi_val = 0, k + 1
        for s in range(t):
            v = pi[s]
            if lo_val < v < pi[t]:
                lo_val, lower[t] = v, s
            elif pi[t] < v < hi_val:
                hi_val, upper[t] = v, s
    chosen = [0] * k

    def place(t: int, start: int) -> bool:
        if t == k:
            return True
        lo = chosen[lower[t]] if lower[t] >= 0 else 0
        hi = chosen[upper[t]] if upper[t] >= 0 else n + 1
        for pos in range(start, n - (k - t) + 1):
            v = sigma[pos]
            if lo < v < hi:
                chosen[t] = v
                if place(t + 1, pos + 1):
                    return True
        return False

    return place(0, 0)


def inverse(sigma: Sequence[int]) -> Permutation:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma, 1):
        inv[v - 1] = i
    return Permutation._trusted(inv)


def reverse(sigma: Sequence[int]) -> Permutation:
    return Permutation._trusted(reversed(tuple(sigma)))


def complement(sigma: Sequence[int]) -> Permutation:
    n = len(sigma)
    return Permutation._trusted(n + 1 - v for v in sigma)


def rotate_left(sigma: Sequence[int], k: int = 1) -> Permutation:
    """Cyclically shift the word ``k`` places to the left."""
    n = len(sigma)
    if n == 0:
        raise ValueError("cannot rotate the empty permutation")
    if k < 0:
        raise ValueError("rotation amount must be nonnegative")
    k %= n
    word = tuple(sigma)
    return Permutation._trusted(word[k:] + word[:k])


@dataclass(frozen=True)
class OrbitClass:
    """The class of a permutation under cyclic rotation of positions."""

    representative: Permutation
    members: frozenset

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.members

    def sorted_members(self) -> list[Permutation]:
        return sorted(self.members)


def orbit(sigma: Sequence[int]) -> OrbitClass:
    n = len(sigma)
    if n == 0:
        raise ValueError("orbit of the empty permutation is undefined")
    members = frozenset(rotate_left(sigma, k) for k in range(n))
    return OrbitClass(representative=min(members), members=members)
