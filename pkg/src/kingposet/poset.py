"""The containment poset of cylindrical king permutations.

Downsets and their Hasse diagrams, intermediate-permutation (gap) search, and
exhaustive verifiers for the structural theorems about the poset.  The
verifiers return a :class:`VerificationReport`; each rank (permutation size)
produces one JSON-serializable record, so long runs can be streamed to a
JSON-lines file and resumed rank by rank.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .kings import BondKind, PermClass, bonds, enumerate_kings, is_cylindrical_king
from .parallel import ordered_map
from .perm_core import Permutation, contains, delete_value, delete_values, format_perm, orbit

__all__ = [
    "BUILDING_BLOCKS",
    "DownsetGraph",
    "GapWitness",
    "ObservationCase",
    "VerificationReport",
    "ck_pattern_levels",
    "deletion_observation_case",
    "downset",
    "downset_bottom_up",
    "find_intermediate",
    "verify_building_blocks",
    "verify_deletion_observation",
    "verify_gap_theorem",
]

#: Every cylindrical king permutation of size >= 5 contains one of these.
BUILDING_BLOCKS: tuple[Permutation, ...] = tuple(
    sorted(orbit((3, 1, 4, 2, 5)).members | orbit((2, 4, 1, 3, 5)).members)
)


def _require_ck(sigma: Sequence[int], name: str = "sigma") -> None:
    if not is_cylindrical_king(sigma):
        raise ValueError(f"{name}={format_perm(sigma)} is not a cylindrical king permutation")


def _pattern_levels(word: tuple[int, ...]) -> dict[int, set[tuple[int, ...]]]:
    """All patterns of ``word`` by size, via repeated single-value deletion."""
    levels = {len(word): {word}}
    current = {word}
    for m in range(len(word), 1, -1):
        below = set()
        for w in current:
            for a in range(1, m + 1):
                below.add(tuple(v - (v > a) for v in w if v != a))
        levels[m - 1] = below
        current = below
    return levels


@lru_cache(maxsize=None)
def ck_pattern_levels(word: tuple[int, ...]) -> Mapping[int, frozenset]:
    """Cylindrical king patterns of ``word`` (itself included), keyed by size.

    Memoized.  Patterns come back as plain tuples; sizes without any
    cylindrical king pattern are omitted.
    """
    out = {}
    for m, pats in _pattern_levels(word).items():
        keep = frozenset(p for p in pats if is_cylindrical_king(p))
        if keep:
            out[m] = keep
    return out


def _below(lower: tuple, upper: tuple) -> bool:
    return lower in ck_pattern_levels(upper).get(len(lower), ())


@dataclass(frozen=True)
class DownsetGraph:
    """Hasse diagram of the cylindrical king permutations below ``sigma``."""

    sigma: Permutation
    nodes: frozenset
    edges: frozenset  # (upper, lower) pairs

    def sorted_nodes(self) -> list[Permutation]:
        return sorted(self.nodes, key=lambda p: (-len(p), p))

    def sorted_edges(self) -> list[tuple[Permutation, Permutation]]:
        return sorted(self.edges, key=lambda e: (-len(e[0]), e[0], -len(e[1]), e[1]))

    def to_json(self) -> dict:
        return {
            "sigma": str(self.sigma),
            "nodes": [str(p) for p in self.sorted_nodes()],
            "edges": [[str(u), str(l)] for u, l in self.sorted_edges()],
        }

    def to_dot(self, name: str = "downset") -> str:
        ids = {p: f"n{k}" for k, p in enumerate(self.sorted_nodes())}
        lines = [f"digraph {name} {{", "  rankdir=TB;"]
        for p, ident in ids.items():
            lines.append(f'  {ident} [label="{p}"];')
        for u, l in self.sorted_edges():
            lines.append(f"  {ids[u]} -> {ids[l]};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _covers(nodes: Iterable[Permutation], below: Callable[[tuple, tuple], bool]) -> frozenset:
    by_size = sorted(nodes, key=len)
    relation = {u: {l for l in by_size if len(l) < len(u) and below(l, u)} for u in by_size}
    edges = set()
    for u, lowers in relation.items():
        for l in lowers:
            # l -> u is a cover unless some m sits strictly between them
            if not any(l in relation[m] for m in lowers if len(m) > len(l)):
                edges.add((u, l))
    return frozenset(edges)


def downset(sigma: Sequence[int]) -> DownsetGraph:
    """Top-down: repeated deletions from ``sigma``, memoized per permutation."""
    _require_ck(sigma)
    top = Permutation(sigma)
    nodes = frozenset(Permutation._trusted(p)
                      for pats in ck_pattern_levels(tuple(top)).values() for p in pats)
    return DownsetGraph(top, nodes, _covers(nodes, _below))


def downset_bottom_up(sigma: Sequence[int]) -> DownsetGraph:
    """Oracle for :func:`downset`: filter CK_m by containment, m = n .. 1."""
    _require_ck(sigma)
    top = Permutation(sigma)
    nodes = frozenset(tau for m in range(len(top), 0, -1)
                      for tau in enumerate_kings(m, PermClass.CYLINDRICAL) if contains(tau, top))
    return DownsetGraph(top, nodes, _covers(nodes, contains))


@dataclass(frozen=True)
class GapWitness:
    sigma: Permutation
    pi: Permutation
    tau: Optional[Permutation] = None
    gap: Optional[int] = None  # |sigma| - |tau|

    @property
    def found(self) -> bool:
        return self.tau is not None

    def to_json(self) -> dict:
        return {"sigma": str(self.sigma), "pi": str(self.pi),
                "tau": None if self.tau is None else str(self.tau), "gap": self.gap}


def find_intermediate(sigma: Sequence[int], pi: Sequence[int], max_gap: int) -> GapWitness:
    """Smallest-gap ``tau`` in the poset with ``pi < tau < sigma``.

    Ranks ``|sigma| - 1`` down to ``|sigma| - max_gap`` are searched; ties go
    to the lexicographically least candidate.
    """
    _require_ck(sigma, "sigma")
    _require_ck(pi, "pi")
    sigma, pi = Permutation(sigma), Permutation(pi)
    n = len(sigma)
    if not (len(pi) < n and contains(pi, sigma)):
        raise ValueError(f"{pi} is not strictly contained in {sigma}")
    for gap in range(1, max_gap + 1):
        if n - gap <= len(pi):
            break
        candidates = {delete_values(sigma, drop) for drop in combinations(range(1, n + 1), gap)}
        hits = [t for t in candidates if is_cylindrical_king(t) and contains(pi, t)]
        if hits:
            return GapWitness(sigma, pi, min(hits), gap)
    return GapWitness(sigma, pi)


@dataclass
class VerificationReport:
    suite: str
    n_max: int
    ranks: list[dict] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return sum(r["checked"] for r in self.ranks)

    @property
    def violations(self) -> list:
        return [v for r in self.ranks for v in r["violations"]]

    @property
    def ok(self) -> bool:
        return not self.violations

    def rank(self, n: int) -> dict:
        for r in self.ranks:
            if r["n"] == n:
                return r
        raise KeyError(n)

    def to_json(self) -> dict:
        return {"suite": self.suite, "n_max": self.n_max, "ok": self.ok,
                "checked": self.checked, "violations": self.violations, "ranks": self.ranks}


RankHook = Callable[[dict], None]


def _run_suite(suite: str, n_min: int, n_max: int, domain: Callable[[int], list],
               worker: Callable, summarize: Callable[[int, list], dict], *,
               jobs: int = 1, sample: Optional[int] = None, seed: Optional[int] = None,
               done: Optional[Mapping[int, dict]] = None,
               on_rank: Optional[RankHook] = None) -> VerificationReport:
    report = VerificationReport(suite, n_max)
    for n in range(n_min, n_max + 1):
        if done and n in done:
            report.ranks.append(done[n])
            continue
        words = [tuple(p) for p in domain(n)]
        if sample is not None and len(words) > sample:
            # seeded per rank so a resumed run draws the same sample
            rng = random.Random(None if seed is None else f"{seed}:{n}")
            words = sorted(rng.sample(words, sample))
        results = list(ordered_map(worker, words, jobs))
        record = {"suite": suite, "n": n, "sampled": sample is not None}
        record.update(summarize(n, list(zip(words, results))))
        report.ranks.append(record)
        if on_rank is not None:
            on_rank(record)
    return report


def _ck_domain(n: int) -> list:
    return list(enumerate_kings(n, PermClass.CYLINDRICAL))


# -- gap theorem -------------------------------------------------------------

GAP_BOUND = 4


def _min_gaps(word: tuple) -> dict[tuple, Optional[int]]:
    """For each CK pattern pi of ``word`` (strictly smaller), the least
    ``|word| - |tau|`` over CK ``tau`` with ``pi < tau < word``, or None."""
    n = len(word)
    levels = ck_pattern_levels(word)
    best: dict[tuple, Optional[int]] = {}
    for q in range(n - 1, 0, -1):
        for tau in levels.get(q, ()):
            for p, pats in ck_pattern_levels(tau).items():
                if p < q:
                    for pi in pats:
                        best.setdefault(pi, n - q)
    return {pi: best.get(pi) for p, pats in levels.items() if p < n for pi in pats}


def _gap_worker(word: tuple) -> dict:
    n = len(word)
    out = {"checked": 0, "violations": [], "extremal": [], "gap5": [], "min_gap": Counter()}
    for pi, g in sorted(_min_gaps(word).items()):
        diff = n - len(pi)
        if diff == GAP_BOUND and g is None:
            out["extremal"].append([format_perm(word), format_perm(pi)])
        if diff == 5:
            out["gap5"].append([format_perm(word), format_perm(pi), g])
        if diff > GAP_BOUND:
            out["checked"] += 1
            out["min_gap"][g] += 1
            if g is None or g > GAP_BOUND:
                out["violations"].append({"sigma": format_perm(word), "pi": format_perm(pi),
                                          "min_gap": g})
    return out


def _gap_summary(n: int, results: list) -> dict:
    hist = Counter()
    rec = {"checked": 0, "violations": [], "extremal_gap4": [], "gap5_pairs": 0,
           "gap5_max_min_gap": None}
    for _, r in results:
        rec["checked"] += r["checked"]
        rec["violations"].extend(r["violations"])
        rec["extremal_gap4"].extend(r["extremal"])
        hist.update(r["min_gap"])
        for _, _, g in r["gap5"]:
            rec["gap5_pairs"] += 1
            if g is not None and (rec["gap5_max_min_gap"] is None or g > rec["gap5_max_min_gap"]):
                rec["gap5_max_min_gap"] = g
    # key None: no intermediate at all
    order = sorted(hist, key=lambda g: (g is None, g or 0))
    rec["min_gap_histogram"] = {str(g): hist[g] for g in order}
    return rec


def verify_gap_theorem(n_max: int, **kw) -> VerificationReport:
    """Every CK pair ``pi < sigma`` with ``|sigma| - |pi| > 4``, 6 <= |sigma| <= n_max,
    has an intermediate ``tau`` with ``|sigma| - |tau| <= 4``.

    Rank records also list the extremal pairs (difference exactly 4 with no
    intermediate at all) and summarize the difference-5 pairs separately.
    """
    if n_max < 6:
        raise ValueError("verify_gap_theorem needs n_max >= 6")
    return _run_suite("gap", 6, n_max, _ck_domain, _gap_worker, _gap_summary, **kw)


# -- building blocks ---------------------------------------------------------

def _blocks_worker(word: tuple) -> Optional[Permutation]:
    for pi in BUILDING_BLOCKS:
        if contains(pi, word):
            return pi
    return None


def _blocks_summary(n: int, results: list) -> dict:
    return {
        "checked": len(results),
        "violations": [format_perm(w) for w, pi in results if pi is None],
        "witnesses": {format_perm(w): str(pi) for w, pi in results if pi is not None},
    }


def verify_building_blocks(n_max: int, **kw) -> VerificationReport:
    """Every CK_n member, 5 <= n <= n_max, contains a rotation of 31425 or 24135."""
    if n_max < 5:
        raise ValueError("verify_building_blocks needs n_max >= 5")
    return _run_suite("blocks", 5, n_max, _ck_domain, _blocks_worker, _blocks_summary, **kw)


# -- deletion observation ----------------------------------------------------

@dataclass(frozen=True)
class ObservationCase:
    """One cyclic bond of ``delete_value(sigma, i)`` and what happens to ``pi``."""

    kind: BondKind
    elements: tuple[int, int]  # the bond's entries, as values of sigma
    below_first: bool  # pi < delete_value(sigma, elements[0])
    below_second: bool

    @property
    def holds(self) -> bool:
        if self.kind is BondKind.REGULAR:
            return self.below_first and self.below_second
        return self.below_first or self.below_second


def _bond_elements(tau_bond_values: tuple[int, int], removed: int) -> tuple[int, int]:
    x, y = tau_bond_values
    return (x + (x >= removed), y + (y >= removed))


def deletion_observation_case(sigma: Sequence[int], pi: Sequence[int], i: int) -> list[ObservationCase]:
    """Check ``pi`` against both ends of every cyclic bond of ``delete_value(sigma, i)``."""
    tau = delete_value(sigma, i)
    if not contains(pi, tau):
        raise ValueError(f"{format_perm(pi)} is not contained in {tau}")
    cases = []
    for b in bonds(tau):
        j, k = _bond_elements(b.values, i)
        cases.append(ObservationCase(b.kind, (j, k), contains(pi, delete_value(sigma, j)),
                                     contains(pi, delete_value(sigma, k))))
    return cases


def _observation_worker(word: tuple) -> dict:
    out = {"checked": 0, "violations": [], "edge_one_sided": 0}
    for i in range(1, len(word) + 1):
        tau = delete_value(word, i)
        tau_bonds = bonds(tau)
        if not tau_bonds:
            continue
        below = [p for pats in ck_pattern_levels(tuple(tau)).values() for p in pats]
        for b in tau_bonds:
            j, k = _bond_elements(b.values, i)
            dj, dk = delete_value(word, j), delete_value(word, k)
            for pi in below:
                case = ObservationCase(b.kind, (j, k), contains(pi, dj), contains(pi, dk))
                out["checked"] += 1
                if b.kind is BondKind.EDGE and case.below_first != case.below_second:
                    out["edge_one_sided"] += 1
                if not case.holds:
                    out["violations"].append({"sigma": format_perm(word), "pi": format_perm(pi),
                                              "i": i, "elements": [j, k], "kind": b.kind.value})
    return out


def _observation_summary(n: int, results: list) -> dict:
    return {
        "checked": sum(r["checked"] for _, r in results),
        "violations": [v for _, r in results for v in r["violations"]],
        "edge_one_sided": sum(r["edge_one_sided"] for _, r in results),
    }


def _all_perms(n: int) -> list:
    return list(permutations(range(1, n + 1)))


def verify_deletion_observation(n_max: int, domain: str = "ck", **kw) -> VerificationReport:
    """For sigma in CK_n (``domain="ck"``) or all of S_n (``domain="all"``)."""
    if n_max < 5:
        raise ValueError("verify_deletion_observation needs n_max >= 5")
    if domain == "ck":
        return _run_suite("deletion-obs", 5, n_max, _ck_domain, _observation_worker,
                          _observation_summary, **kw)
    if domain == "all":
        return _run_suite("deletion-obs", 3, n_max, _all_perms, _observation_worker,
                          _observation_summary, **kw)
    raise ValueError(f"unknown domain {domain!r}")
