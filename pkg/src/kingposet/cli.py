"""Command-line front end: ``kingposet <command> ...``.

Exit codes: 0 success, 1 verification found a violation, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .kings import (PermClass, bonds, ck_children, enumerate_kings, is_cylindrical_king,
                    is_king, separators)
from .metrics import MetricReport, breadth, cyclic_breadth
from .perm_core import ParseError, Permutation, orbit, parse
from .poset import downset, verify_building_blocks, verify_deletion_observation, verify_gap_theorem
from .prolific import is_k_prolific, prolific_criterion

MAX_N_ENV = "KINGPOSET_MAX_N"
DEFAULT_MAX_N = 8

SUITES = {
    "gap": verify_gap_theorem,
    "blocks": verify_building_blocks,
    "deletion-obs": verify_deletion_observation,
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class AnalysisReport:
    permutation: Permutation
    is_king: bool
    is_cylindrical_king: bool
    breadth: MetricReport
    cyclic_breadth: MetricReport
    bonds: list
    separators: list
    ck_children: list

    @property
    def n(self) -> int:
        return len(self.permutation)

    def to_json(self) -> dict:
        return {
            "permutation": str(self.permutation),
            "n": self.n,
            "is_king": self.is_king,
            "is_cylindrical_king": self.is_cylindrical_king,
            "breadth": self.breadth.to_json(),
            "cyclic_breadth": self.cyclic_breadth.to_json(),
            "bonds": [b.to_json() for b in self.bonds],
            "separators": [s.to_json() for s in self.separators],
            "ck_children": [str(c) for c in self.ck_children],
        }


def analyze(sigma: Permutation) -> AnalysisReport:
    ck = is_cylindrical_king(sigma)
    children = sorted(ck_children(sigma)) if ck and len(sigma) >= 2 else []
    return AnalysisReport(sigma, is_king(sigma), ck, breadth(sigma), cyclic_breadth(sigma),
                          bonds(sigma), separators(sigma), children)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _max_n_cap() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_N_ENV}={raw!r} is not an integer") from None


def _class_arg(name: str) -> PermClass:
    try:
        return PermClass.from_name(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_analyze(args) -> int:
    report = analyze(parse(args.perm))
    if not args.table:
        _emit(report.to_json())
        return 0
    data = report.to_json()
    for key in ("permutation", "n", "is_king", "is_cylindrical_king"):
        print(f"{key:20} {data[key]}")
    for key in ("breadth", "cyclic_breadth"):
        m = data[key]
        value = "unbounded" if m["value"] is None else f"{m['value']} at {tuple(m['witness'])}"
        print(f"{key:20} {value}")
    print(f"{'bonds':20} " + (", ".join(f"{b['kind']} {tuple(b['positions'])}" for b in data["bonds"]) or "-"))
    print(f"{'separators':20} " + (", ".join(
        f"{s['value']}@{s['position']} {s['kind']}-{s['orientation']}" for s in data["separators"]) or "-"))
    print(f"{'ck_children':20} " + (" ".join(data["ck_children"]) or "-"))
    return 0


def cmd_enumerate(args) -> int:
    cls = _class_arg(args.cls)
    if cls is PermClass.PLAIN:
        raise UsageError("enumerate --class must be king or ck")
    perms = enumerate_kings(args.n, cls, jobs=args.jobs)
    if args.format == "count":
        print(sum(1 for _ in perms))
    elif args.format == "lines":
        for p in perms:
            print(p)
    else:
        _emit({"n": args.n, "class": cls.value, "permutations": [str(p) for p in perms]})
    return 0


def cmd_downset(args) -> int:
    graph = downset(parse(args.perm))
    if args.dot is not None:
        text = graph.to_dot()
        if args.dot == "-":
            sys.stdout.write(text)
        else:
            Path(args.dot).write_text(text)
    if args.json:
        _emit(graph.to_json())
    if args.dot is None and not args.json:
        for node in graph.sorted_nodes():
            print(node)
        for upper, lower in graph.sorted_edges():
            print(f"{upper} -> {lower}")
    return 0


def cmd_prolific(args) -> int:
    sigma = parse(args.perm)
    cls = _class_arg(args.cls)
    if args.criterion_only:
        if cls is PermClass.PLAIN:
            raise UsageError("--criterion-only needs --class king or ck")
        _emit({"k": args.k, "class": cls.value,
               "criterion": prolific_criterion(sigma, args.k, cls)})
    else:
        _emit(is_k_prolific(sigma, args.k, cls).to_json())
    return 0


def _load_done(path: Path, suite: str) -> dict[int, dict]:
    done = {}
    if not path.exists():
        return done
    for line in path.read_text().splitlines():
        if line.strip():
            record = json.loads(line)
            if record.get("suite") == suite and "n" in record:
                done[record["n"]] = record
    return done


def cmd_verify(args) -> int:
    cap = _max_n_cap()
    n_max = cap if args.max_n is None else args.max_n
    if n_max > cap:
        raise UsageError(f"--max-n {n_max} exceeds the cap {cap}; raise {MAX_N_ENV} to allow it")
    if args.seed is not None and args.sample is None:
        raise UsageError("--seed only applies together with --sample")
    if args.resume and not args.jsonl:
        raise UsageError("--resume needs --jsonl FILE")
    kw = {"jobs": args.jobs, "sample": args.sample, "seed": args.seed}
    if args.suite == "deletion-obs":
        kw["domain"] = args.domain
    sink = None
    if args.jsonl:
        path = Path(args.jsonl)
        if args.resume:
            kw["done"] = _load_done(path, args.suite)
        sink = path.open("a")
        kw["on_rank"] = lambda rec: (sink.write(json.dumps(rec) + "\n"), sink.flush())
    try:
        report = SUITES[args.suite](n_max, **kw)
    finally:
        if sink is not None:
            sink.close()
    summary = {"suite": report.suite, "n_max": report.n_max, "ok": report.ok,
               "checked": report.checked, "violations": report.violations,
               "per_rank": {r["n"]: r["checked"] for r in report.ranks}}
    if args.suite == "gap":
        summary["extremal_gap4"] = {r["n"]: len(r["extremal_gap4"]) for r in report.ranks}
        summary["gap5_pairs"] = {r["n"]: r["gap5_pairs"] for r in report.ranks}
    _emit(report.to_json() if args.full else summary)
    return 0 if report.ok else 1


def cmd_orbit(args) -> int:
    cls = orbit(parse(args.perm))
    _emit({"representative": str(cls.representative),
           "members": [str(p) for p in cls.sorted_members()]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kingposet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="metrics, bonds and separators of one permutation")
    p.add_argument("perm")
    p.add_argument("--table", action="store_true", help="aligned text instead of JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list K_n or CK_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", default="ck", help="king or ck")
    p.add_argument("--format", choices=["count", "lines", "json"], default="lines")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("downset", help="Hasse diagram of the CK downset")
    p.add_argument("perm")
    p.add_argument("--dot", metavar="FILE", help="write DOT to FILE ('-' for stdout)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_downset)

    p = sub.add_parser("prolific", help="k-prolific test")
    p.add_argument("--perm", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--class", dest="cls", default="plain", help="plain, king or ck")
    p.add_argument("--criterion-only", action="store_true")
    p.set_defaults(func=cmd_prolific)

    p = sub.add_parser("verify", help="exhaustive theorem checks")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-n", type=int, default=None,
                   help=f"largest size checked (default and cap: ${MAX_N_ENV} or {DEFAULT_MAX_N})")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--domain", choices=["ck", "all"], default="ck",
                   help="deletion-obs: sigma ranges over CK_n or all of S_n")
    p.add_argument("--sample", type=int, default=None, help="random sigmas per rank instead of all")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jsonl", metavar="FILE", help="append one record per rank to FILE")
    p.add_argument("--resume", action="store_true", help="reuse ranks already in --jsonl FILE")
    p.add_argument("--full", action="store_true", help="print every rank record")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="rotation class of a permutation")
    p.add_argument("perm")
    p.set_defaults(func=cmd_orbit)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"kingposet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
