"""Shared brute-force oracles.

Everything here is written from the definitions with itertools only, so the
library code is never checked against itself.
"""
import json
import os
from functools import lru_cache
from itertools import combinations, permutations
from pathlib import Path

import pytest

GOLDEN = json.loads((Path(__file__).parent / "golden" / "golden.json").read_text())
MAX_N = int(os.environ.get("KINGPOSET_MAX_N", "8"))


def std(seq):
    ranks = {v: r for r, v in enumerate(sorted(seq), 1)}
    return tuple(ranks[v] for v in seq)


@lru_cache(maxsize=None)
def all_perms(n):
    return tuple(permutations(range(1, n + 1)))


def oracle_king(w):
    return len(w) >= 1 and all(abs(w[i] - w[i + 1]) != 1 for i in range(len(w) - 1))


def oracle_ck(w):
    if len(w) == 1:
        return True
    return oracle_king(w) and abs(w[0] - w[-1]) != 1


@lru_cache(maxsize=None)
def oracle_ck_set(n):
    return tuple(w for w in all_perms(n) if oracle_ck(w))


@lru_cache(maxsize=None)
def oracle_king_set(n):
    return tuple(w for w in all_perms(n) if oracle_king(w))


def oracle_contains(pi, sigma):
    return any(std(sub) == tuple(pi) for sub in combinations(sigma, len(pi)))


def oracle_min_distance(w, cyclic):
    n = len(w)
    best = None
    for i, j in combinations(range(n), 2):
        pos = j - i
        if cyclic:
            pos = min(pos, n - pos)
        d = pos + abs(w[i] - w[j])
        best = d if best is None else min(best, d)
    return best


def oracle_delete(w, a):
    return std([v for v in w if v != a])


@pytest.fixture
def golden():
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion" not in nodeid:
                continue
            if outcome == "skipped" or rep.when == "call":
                lines.append((nodeid.split("::")[-1], outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{outcome:8} {name}")
