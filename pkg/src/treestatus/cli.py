"""Command-line front end.

Exit codes: 0 success / realizable / true, 1 a well-formed negative
answer, 2 bad input. ``--json`` switches to one JSON document per run.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import checks
from .errors import (
    CapExceeded,
    GraphError,
    InstanceError,
    NotInjectiveError,
    NotRealizable,
    StructureError,
)
from .families import KINDS, FamilySpec, generate
from .formats import (
    ParseError,
    format_edge_list,
    format_matrix,
    format_partition,
    format_sequence,
    parse_instance,
    parse_partition,
    parse_sequence,
    read_graph,
)
from .graph import Graph, Tree, distinct_status_count, status_sequence, statuses, tree_statuses
from .hardness import (
    ThreePartitionInstance,
    build_gadget_tree,
    extract_partition,
    pad_instance,
    reduce_3partition,
)
from .oracle import realize_exhaustive, status_unique_in_trees
from .partitions import (
    generate_Gm,
    is_equitable,
    orbit_partition,
    quotient_matrix,
    status_partition,
)
from .realize import realize_injective
from .srtd3 import srt_d3_realize


class InputError(Exception):
    pass


class Result:
    def __init__(self, code: int, text: str, doc: dict[str, Any]) -> None:
        self.code = code
        self.text = text
        self.doc = doc


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _tree(path: str) -> Tree:
    g = read_graph(_read(path), path, tree=True)
    assert isinstance(g, Tree)
    return g


def _edges(g: Graph) -> list[list[Any]]:
    if g.n == 1:
        return []
    return [[u, v] for u, v in g.labelled_edges()]


def _verified_tree_output(t: Tree, seq: Sequence[int], verdict: str) -> Result:
    if sorted(tree_statuses(t)) != sorted(seq):
        raise RuntimeError("realization failed re-verification")
    doc = {"verdict": verdict, "sequence": sorted(seq), "edges": _edges(t)}
    return Result(0, format_edge_list(t), doc)


def cmd_status(a: argparse.Namespace) -> Result:
    t = _tree(a.tree)
    per_vertex = tree_statuses(t)
    seq = sorted(per_vertex)
    doc = {
        "sequence": seq,
        "statuses": {str(t.labels[v]): s for v, s in enumerate(per_vertex)},
        "distinct": distinct_status_count(t),
        "injective": len(set(seq)) == t.n,
    }
    return Result(0, format_sequence(seq) + "\n", doc)


def cmd_realize_injective(a: argparse.Namespace) -> Result:
    seq = parse_sequence(_read(a.seq), a.seq)
    try:
        r = realize_injective(seq)
    except NotRealizable as exc:
        return Result(1, f"not realizable: {exc}\n", {"verdict": "not realizable", "sequence": sorted(seq)})
    # label vertices by their status so the output reads like the input
    labelled = Tree(r.tree.n, r.tree.edges(), r.status_of)
    return _verified_tree_output(labelled, seq, "realizable")


def cmd_realize_exhaustive(a: argparse.Namespace) -> Result:
    seq = parse_sequence(_read(a.seq), a.seq)
    trees = realize_exhaustive(seq)
    doc = {"verdict": "realizable" if trees else "not realizable", "sequence": sorted(seq),
           "witness": [_edges(t) for t in trees]}
    if not trees:
        return Result(1, "not realizable\n", doc)
    text = "\n".join(f"# tree {i + 1} of {len(trees)}\n" + format_edge_list(t) for i, t in enumerate(trees))
    return Result(0, text, doc)


def cmd_status_unique(a: argparse.Namespace) -> Result:
    t = _tree(a.tree)
    unique = status_unique_in_trees(t)
    doc = {"verdict": unique, "sequence": status_sequence(t)}
    return Result(0 if unique else 1, ("status unique in trees" if unique else "not status unique") + "\n", doc)


def _instance(path: str) -> ThreePartitionInstance:
    return ThreePartitionInstance(parse_instance(_read(path), path))


def cmd_reduce(a: argparse.Namespace) -> Result:
    inst = _instance(a.instance)
    if a.pad:
        inst = pad_instance(inst)
    seq = reduce_3partition(inst).sequence()
    doc = {"sequence": seq, "instance": list(inst.elements), "structure_forced": inst.structure_forced()}
    return Result(0, format_sequence(seq) + "\n", doc)


def cmd_gadget(a: argparse.Namespace) -> Result:
    inst = _instance(a.instance)
    t = build_gadget_tree(inst, parse_partition(_read(a.partition), a.partition))
    return Result(0, format_edge_list(t), {"edges": _edges(t), "sequence": status_sequence(t)})


def cmd_extract(a: argparse.Namespace) -> Result:
    t = _tree(a.tree)
    inst = _instance(a.instance)
    try:
        part = extract_partition(t, inst)
    except StructureError as exc:
        return Result(1, f"no partition: {exc}\n", {"verdict": "no partition"})
    return Result(0, format_partition(part), {"verdict": "partition", "witness": [list(p) for p in part]})


def cmd_srt_d3(a: argparse.Namespace) -> Result:
    seq = parse_sequence(_read(a.seq), a.seq)
    try:
        t = srt_d3_realize(seq, a.delta)
    except NotRealizable as exc:
        return Result(1, f"not realizable: {exc}\n", {"verdict": "not realizable", "sequence": sorted(seq)})
    return _verified_tree_output(t, seq, "realizable")


def cmd_family(a: argparse.Namespace) -> Result:
    kind = a.kind.replace("-", "_")
    if kind not in KINDS:
        raise InputError(f"unknown family {a.kind!r}; choose from {', '.join(KINDS)}")
    t = generate(FamilySpec(kind, tuple(a.params)))
    return Result(0, format_edge_list(t), {"edges": _edges(t), "sequence": status_sequence(t)})


def cmd_gm(a: argparse.Namespace) -> Result:
    g = generate_Gm(a.m)
    names = "".join(f"# {v} {lab}\n" for v, lab in enumerate(g.labels))
    edges = "".join(f"{u} {v}\n" for u, v in g.edges())
    return Result(0, names + edges, {"edges": [list(e) for e in g.edges()], "labels": list(g.labels)})


def cmd_partitions(a: argparse.Namespace) -> Result:
    g = read_graph(_read(a.graph), a.graph)
    sp = status_partition(g)
    orbits = orbit_partition(g)
    q = quotient_matrix(g, sp, a.base)
    equitable = is_equitable(g, sp, a.base)
    lab = g.labels
    sp_lab = [[lab[v] for v in p] for p in sp]
    orb_lab = [[lab[v] for v in p] for p in orbits.partition]
    text = (
        "# status partition\n" + format_partition(sp_lab)
        + "# orbit partition\n" + format_partition(orb_lab)
        + f"# automorphism group order {orbits.order}\n"
        + f"# quotient matrix ({a.base}) of the status partition; equitable: {equitable}\n"
        + format_matrix(q.rows)
    )
    doc = {
        "sequence": sorted(statuses(g)),
        "status_partition": sp_lab,
        "orbit_partition": orb_lab,
        "group_order": orbits.order,
        "base": a.base,
        "quotient": [[str(x) for x in row] for row in q.rows],
        "verdict": equitable,
    }
    return Result(0, text, doc)


def cmd_check(a: argparse.Namespace) -> Result:
    fn = checks.CHECKS[a.check_id]
    if a.check_id == "reduction-roundtrip":
        res = fn(seed=a.seed)
    elif a.max_n is not None:
        res = fn(a.max_n)
    else:
        res = fn()
    text = res.line() + "\n" + "".join(f"  {f}\n" for f in res.failures[:20])
    doc = {"verdict": res.passed, "check": res.name, "checked": res.checked,
           "summary": res.summary, "witness": res.failures}
    return Result(0 if res.passed else 1, text, doc)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treestatus", description="Status sequences of trees.")
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("status", help="status sequence of a tree")
    s.add_argument("tree")
    s.set_defaults(func=cmd_status)

    s = sub.add_parser("realize-injective", help="rebuild the tree of an injective sequence")
    s.add_argument("seq")
    s.set_defaults(func=cmd_realize_injective)

    s = sub.add_parser("realize-exhaustive", help="all trees with a sequence (small n)")
    s.add_argument("seq")
    s.set_defaults(func=cmd_realize_exhaustive)

    s = sub.add_parser("status-unique", help="is the tree status unique among trees")
    s.add_argument("tree")
    s.set_defaults(func=cmd_status_unique)

    s = sub.add_parser("reduce", help="3-Partition instance to a status sequence")
    s.add_argument("instance")
    s.add_argument("--pad", action="store_true", help="add 3B+19m+9 to every element first")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("gadget", help="gadget tree of an instance and a partition")
    s.add_argument("instance")
    s.add_argument("partition", help="one triple of 0-based element indices per line")
    s.set_defaults(func=cmd_gadget)

    s = sub.add_parser("extract", help="read a triple partition off a realizing tree")
    s.add_argument("tree")
    s.add_argument("instance")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("srt-d3", help="depth-3 realization with bounded root degree")
    s.add_argument("seq")
    s.add_argument("--delta", type=int, required=True)
    s.set_defaults(func=cmd_srt_d3)

    s = sub.add_parser("family", help="generate a named tree")
    s.add_argument("kind", help=", ".join(KINDS))
    s.add_argument("params", type=int, nargs="*")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("gm", help="the G_m graph")
    s.add_argument("m", type=int)
    s.set_defaults(func=cmd_gm)

    s = sub.add_parser("partitions", help="status and orbit partitions of a graph")
    s.add_argument("graph")
    s.add_argument("--base", choices=["adjacency", "distance"], default="adjacency")
    s.set_defaults(func=cmd_partitions)

    s = sub.add_parser("check", help="run a desk-scale verification sweep")
    s.add_argument("check_id", metavar="check", choices=sorted(checks.CHECKS))
    s.add_argument("--max-n", type=int, default=None)
    s.set_defaults(func=cmd_check)
    return p


def run(argv: Sequence[str] | None = None) -> Result:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return Result(2 if exc.code else 0, "", {})
    try:
        res = args.func(args)
    except (ParseError, InputError, GraphError, InstanceError, NotInjectiveError,
            CapExceeded, ValueError) as exc:
        res = Result(2, f"error: {exc}\n", {"verdict": "error", "error": str(exc)})
    res.doc.setdefault("exit", res.code)
    if args.json:
        res.text = json.dumps(res.doc, sort_keys=True) + "\n"
    return res


def main(argv: Sequence[str] | None = None) -> int:
    res = run(argv)
    stream = sys.stdout if res.code != 2 else sys.stderr
    stream.write(res.text)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
