"""Command-line front end.

Pipeline: parse a problem file, decompose its variety into parts, render
the part tree as text, JSON or DOT, and optionally validate the result
against the brute-force finite-field oracle.

Exit codes: 0 success, 1 input error, 2 node/enumeration limit exceeded,
3 failed oracle check.  Renderings go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .multiproj import (
    MaxNodesExceeded, PartTree, multihomogenize, partition_variety,
)
from .oracle import EnumerationCapExceeded, check_partition
from .parser import ParseError, ProblemError, ProblemSpec, parse_problem
from .poly import to_canonical_text


@dataclass
class RunOptions:
    input_path: str
    format: str = "text"
    leaves_only: bool = False
    max_nodes: int = 10000
    radical: bool = True
    oracle_check: Optional[int] = None


def _node_record(tree: PartTree, part):
    layout = tree.layout
    return {
        "id": part.id,
        "prev": part.prev,
        "path": list(tree.path(part.id)),
        "frozenLevel": part.frozen_level,
        "eq": [to_canonical_text(g, layout) for g in part.eq.generators],
        "neq": [to_canonical_text(q, layout) for q in part.neq],
        "leaf": part.id in set(tree.leaf_ids()),
    }


def render_tree(tree: PartTree, format: str = "text",
                leaves_only: bool = False) -> str:
    """Deterministic rendering of a part tree.

    Text lines read ``(path..., id, ideal(gen,...), {neq,...})`` with the
    full root-to-node path; JSON carries one object per node with stable
    key order; DOT emits one labelled node per part and prev->child edges.
    """
    leaf_ids = set(tree.leaf_ids())
    if leaves_only:
        nodes = [p for p in tree.nodes if p.id in leaf_ids]
    else:
        nodes = list(tree.nodes)
    layout = tree.layout

    if format == "text":
        lines = []
        for part in nodes:
            path = ", ".join(str(i) for i in tree.path(part.id))
            eqs = ",".join(to_canonical_text(g, layout) for g in part.eq.generators)
            neqs = ", ".join(to_canonical_text(q, layout) for q in part.neq)
            lines.append(f"({path}, ideal({eqs}), {{{neqs}}})")
        return "\n".join(lines) + ("\n" if lines else "")

    if format == "json":
        payload = {"nodes": [_node_record(tree, p) for p in nodes]}
        return json.dumps(payload, indent=2) + "\n"

    if format == "dot":
        lines = ["digraph parts {"]
        for part in nodes:
            eqs = ",".join(to_canonical_text(g, layout) for g in part.eq.generators)
            neqs = ",".join(to_canonical_text(q, layout) for q in part.neq)
            label = f"{part.id}: eq=[{eqs}] neq={{{neqs}}}"
            label = label.replace("\\", "\\\\").replace('"', '\\"')
            shape = " shape=box" if part.id in leaf_ids else ""
            lines.append(f'  n{part.id} [label="{label}"{shape}];')
        for part in tree.nodes:
            if part.prev >= 0 and (not leaves_only or part.id in leaf_ids):
                lines.append(f"  n{part.prev} -> n{part.id};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    raise ValueError(f"unknown format {format!r}")


def _homogenized_generators(problem: ProblemSpec, tree: PartTree):
    if problem.form == "x":
        return [multihomogenize(b, tree.layout)
                for b in problem.generators if not b.is_zero()]
    return [b for b in problem.generators if not b.is_zero()]


def run(options: RunOptions) -> int:
    try:
        with open(options.input_path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"error: cannot read {options.input_path}: {exc}", file=sys.stderr)
        return 1

    try:
        problem = parse_problem(text)
    except (ParseError, ProblemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if options.oracle_check is not None:
        p = options.oracle_check
        if problem.field.characteristic == 0:
            print("error: --oracle needs a prime-field problem, "
                  "this one has characteristic 0", file=sys.stderr)
            return 1
        if problem.field.characteristic != p:
            print(f"error: --oracle {p} does not match problem characteristic "
                  f"{problem.field.characteristic}", file=sys.stderr)
            return 1

    try:
        tree = partition_variety(problem, max_nodes=options.max_nodes,
                                 radical=options.radical)
    except MaxNodesExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    for note in tree.diagnostics:
        print(note, file=sys.stderr)

    sys.stdout.write(render_tree(tree, options.format, options.leaves_only))

    if options.oracle_check is not None:
        gens = _homogenized_generators(problem, tree)
        try:
            report = check_partition(tree, gens, options.oracle_check, problem.n)
        except EnumerationCapExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(report.summary())
        if not report.valid:
            for part_id, t in report.unsound:
                print(f"  part {part_id} contains non-variety point {t}",
                      file=sys.stderr)
            for t, ids in report.double_covered:
                print(f"  point {t} covered by parts {ids}", file=sys.stderr)
            for t in report.missing:
                print(f"  variety point {t} not covered", file=sys.stderr)
            return 3
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="p1parts",
        description="Decompose the variety of a polynomial ideal, coordinates "
                    "on the projective line, into disjoint equality/inequality "
                    "parts.")
    parser.add_argument("input", help="problem file (see README for the grammar)")
    parser.add_argument("--format", choices=("text", "json", "dot"),
                        default="text", help="output rendering (default: text)")
    parser.add_argument("--leaves", action="store_true",
                        help="render only the leaf parts")
    parser.add_argument("--max-nodes", type=int, default=10000, metavar="N",
                        help="node budget for the decomposition (default 10000)")
    parser.add_argument("--no-radical", action="store_true",
                        help="skip the radical closure of equality ideals")
    parser.add_argument("--oracle", type=int, default=None, metavar="P",
                        help="verify the partition by brute force over F_P")
    args = parser.parse_args(argv)
    options = RunOptions(
        input_path=args.input,
        format=args.format,
        leaves_only=args.leaves,
        max_nodes=args.max_nodes,
        radical=not args.no_radical,
        oracle_check=args.oracle,
    )
    return run(options)


if __name__ == "__main__":
    sys.exit(main())
