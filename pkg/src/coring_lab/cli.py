"""``coring-lab run <file> ...`` and ``coring-lab explain <task>``."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CoringLabError, UnknownTask
from .instances import bundled_names, load_instance
from .reports import PASS
from .tasks import TASKS, explain, run


def report_document(inst, reports) -> dict:
    return {
        "instance": inst.path,
        "verdict": "fail" if any(r.verdict == "fail" for r in reports) else PASS,
        "tasks": [r.as_dict() for r in reports],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def summary_lines(reports, times) -> list[str]:
    lines = []
    for r, dt in zip(reports, times):
        where = r.data.get("construction") or "-"
        lines.append(f"[{r.verdict}] {r.task:<13} {where:<16} {dt:7.3f}s")
        for c in r.clauses:
            if c.verdict != PASS:
                extra = c.detail.get("reason") or c.detail.get("message") or ""
                lines.append(f"    {c.verdict}: {c.name}" + (f" ({extra})" if extra else ""))
    return lines


def cmd_run(args) -> int:
    inst = load_instance(args.file)
    if args.budget is not None:
        inst.budget = args.budget
    for t in args.task or []:
        if t not in TASKS:
            raise UnknownTask(f"unknown task {t!r}")
    reports, times = run(inst, args.task)
    doc = report_document(inst, reports)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(dumps(doc))
    if not args.quiet:
        print("\n".join(summary_lines(reports, times) + [f"overall: {doc['verdict']}"]))
    return 0 if doc["verdict"] == PASS else 1


def cmd_explain(args) -> int:
    print(f"{args.task}: {explain(args.task)}")
    return 0


def cmd_list(args) -> int:
    print("\n".join(bundled_names()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coring-lab", description="Grouplikes, descent data and automorphisms of finite corings.")
    sub = parser.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run the tasks of an instance file (or a bundled instance name)")
    r.add_argument("file")
    r.add_argument("--task", action="append", help="only run tasks with this name (repeatable)")
    r.add_argument("--budget", type=int, help="override the enumeration budget")
    r.add_argument("--json", metavar="OUT", help="write the JSON report here")
    r.add_argument("--quiet", action="store_true", help="no text summary")
    r.set_defaults(func=cmd_run)
    e = sub.add_parser("explain", help="describe what a task computes")
    e.add_argument("task")
    e.set_defaults(func=cmd_explain)
    ls = sub.add_parser("list", help="list bundled instance files")
    ls.set_defaults(func=cmd_list)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CoringLabError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
