"""``paperlab`` command line: run experiments and write JSON and markdown reports."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .experiments import REGISTRY, ExperimentSpec, FeasibilityRefused, markdown_summary, run
from .io import dump_report
from .presentation import DEFAULT_BOUND


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="paperlab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run one experiment")
    r.add_argument("experiment", choices=sorted(REGISTRY))
    r.add_argument("--n", type=int)
    r.add_argument("--k", type=int)
    r.add_argument("--trunc", type=int, help="truncation level N (default: per experiment)")
    r.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="closure bound (default %(default)s)")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out", help="JSON report path; a .md summary is written next to it")

    a = sub.add_parser("all", help="run every experiment with its defaults")
    a.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--out", help="JSON report path; a .md summary is written next to it")

    sub.add_parser("list", help="list experiments, their claims and feasibility envelopes")
    return p


def _emit(reports: List[dict], out: Optional[str], single: bool):
    payload = reports[0] if single else reports
    text = dump_report(payload, out)
    md = markdown_summary(reports)
    if out:
        Path(out).with_suffix(".md").write_text(md + "\n")
        print(md)
    else:
        print(text)


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "list":
        for name, exp in REGISTRY.items():
            crit = f"criterion {exp.criterion}" if exp.criterion is not None else "supplementary"
            print(f"{name:24s} [{crit}] {exp.claim}\n{'':24s} envelope: {exp.envelope}")
        return 0
    if args.command == "run":
        spec = ExperimentSpec(args.experiment, n=args.n, k=args.k, trunc=args.trunc, bound=args.bound,
                              seed=args.seed, out=args.out)
        try:
            report = run(spec)
        except FeasibilityRefused as exc:
            print(f"FeasibilityRefused: {exc}", file=sys.stderr)
            return 2
        _emit([report], args.out, single=True)
        return 0 if report["agrees_with_claim"] else 1
    reports = []
    for name in REGISTRY:
        report = run(ExperimentSpec(name, bound=args.bound, seed=args.seed))
        print(f"{'ok ' if report['agrees_with_claim'] else 'BAD'} {name} ({report['timing_s']} s)", file=sys.stderr)
        reports.append(report)
    _emit(reports, args.out, single=False)
    return 0 if all(r["agrees_with_claim"] for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
